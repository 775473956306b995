// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wfst/label.h"

namespace wfst {
namespace {

// Returns the number of bytes consumed, or 0 on malformed input.
std::size_t DecodeOne(std::string_view text, std::uint64_t& code_point) {
  const auto lead = static_cast<unsigned char>(text[0]);
  std::size_t length = 0;
  if (lead < 0x80) {
    code_point = lead;
    return 1;
  } else if ((lead & 0xE0) == 0xC0) {
    length = 2;
    code_point = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
    code_point = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    length = 4;
    code_point = lead & 0x07;
  } else {
    return 0;
  }
  if (text.size() < length) return 0;
  for (std::size_t i = 1; i < length; ++i) {
    const auto byte = static_cast<unsigned char>(text[i]);
    if ((byte & 0xC0) != 0x80) return 0;
    code_point = (code_point << 6) | (byte & 0x3F);
  }
  return length;
}

}  // namespace

Label::Label(std::string_view text) {
  if (text.empty()) {
    throw InvalidLabelError("empty string is not a label");
  }
  std::uint64_t code_point = 0;
  const std::size_t used = DecodeOne(text, code_point);
  if (used == 0) throw InvalidLabelError("malformed UTF-8 in label");
  if (used != text.size()) {
    throw InvalidLabelError("multi-character string '" + std::string(text) +
                            "' is not a single label");
  }
  value_ = code_point;
}

std::vector<Label> LabelsFromUtf8(std::string_view text) {
  std::vector<Label> labels;
  labels.reserve(text.size());
  while (!text.empty()) {
    std::uint64_t code_point = 0;
    const std::size_t used = DecodeOne(text, code_point);
    if (used == 0) throw InvalidLabelError("malformed UTF-8 in sequence");
    labels.emplace_back(code_point);
    text.remove_prefix(used);
  }
  return labels;
}

void AppendUtf8(std::uint64_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | ((cp >> 18) & 0x07)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool IsPrintableLabel(Label label) {
  const std::uint64_t cp = label.value();
  if (cp <= 0x20 || cp == 0x7F) return false;
  if (cp >= 0x80 && cp < 0xA0) return false;
  if (cp >= 0xD800 && cp <= 0xDFFF) return false;
  return cp <= 0x10FFFF;
}

std::string LabelsToDisplay(const std::vector<Label>& labels) {
  bool printable = true;
  for (Label l : labels) printable = printable && IsPrintableLabel(l);
  std::string out;
  if (printable) {
    for (Label l : labels) AppendUtf8(l.value(), out);
    return out;
  }
  out.push_back('[');
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(labels[i].value());
  }
  out.push_back(']');
  return out;
}

}  // namespace wfst
