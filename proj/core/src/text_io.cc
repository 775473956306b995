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

#include "wfst/text_io.h"

#include <charconv>
#include <cstdint>

namespace wfst {
namespace detail {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t ParseUnsigned(std::string_view field, std::size_t line,
                            const char* what) {
  std::uint64_t value = 0;
  const char* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(field) + "'");
  }
  return value;
}

}  // namespace

StateId ParseStateField(std::string_view field, std::size_t line) {
  const std::uint64_t v = ParseUnsigned(field, line, "state id");
  if (v > static_cast<std::uint64_t>(INT32_MAX)) {
    throw ParseError(line, "state id " + std::string(field) + " is too large");
  }
  return static_cast<StateId>(v);
}

Label ParseLabelField(std::string_view field, std::size_t line) {
  return Label(ParseUnsigned(field, line, "label"));
}

ScannedText ScanText(std::string_view text) {
  ScannedText doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_semiring = false;
  bool have_initial = false;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = SplitFields(line);

    if (!have_semiring) {
      if (fields.size() != 2 || fields[0] != "#semiring") {
        throw ParseError(line_no, "expected '#semiring <name>' header");
      }
      doc.semiring = fields[1];
      have_semiring = true;
      continue;
    }
    if (!have_initial) {
      if (fields.size() != 2 || fields[0] != "#initial") {
        throw ParseError(line_no, "expected '#initial <state>' or '#initial -'");
      }
      if (fields[1] != "-") doc.initial = ParseStateField(fields[1], line_no);
      have_initial = true;
      continue;
    }
    if (fields.empty()) continue;
    if (fields[0].front() == '#') {
      if (fields[0] != "#states" || fields.size() != 2) {
        throw ParseError(line_no, "unknown directive '" + std::string(line) + "'");
      }
      if (doc.declared_states) {
        throw ParseError(line_no, "repeated #states directive");
      }
      doc.declared_states = ParseStateField(fields[1], line_no);
      continue;
    }
    switch (fields.size()) {
      case 1:
      case 2:
        doc.finals.push_back({line_no, fields});
        break;
      case 4:
      case 5:
        doc.arcs.push_back({line_no, fields});
        break;
      default:
        throw ParseError(line_no,
                         "expected 5 fields (src dst ilabel olabel weight) "
                         "or 2 fields (state weight), found " +
                             std::to_string(fields.size()));
    }
  }
  if (!have_semiring) throw ParseError(1, "missing '#semiring <name>' header");
  if (!have_initial) throw ParseError(2, "missing '#initial' line");
  if (doc.declared_states && doc.initial &&
      *doc.initial >= *doc.declared_states) {
    throw ParseError(2, "initial state " + std::to_string(*doc.initial) +
                            " is beyond the declared states");
  }
  return doc;
}

}  // namespace detail

std::string_view PeekSemiringName(std::string_view text) {
  const std::size_t end = text.find('\n');
  std::string_view line = text.substr(0, end);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto fields = detail::SplitFields(line);
  if (fields.size() != 2 || fields[0] != "#semiring") {
    throw ParseError(1, "expected '#semiring <name>' header");
  }
  return fields[1];
}

}  // namespace wfst
