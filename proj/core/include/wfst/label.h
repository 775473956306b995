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

#ifndef WFST_LABEL_H_
#define WFST_LABEL_H_

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "wfst/errors.h"

namespace wfst {

using StateId = std::int64_t;

// An arc label. Zero is reserved for epsilon. Single characters (and
// one-code-point UTF-8 strings) convert to their code point.
class Label {
 public:
  constexpr Label() = default;

  template <std::integral T>
    requires(!std::same_as<T, bool>)
  constexpr Label(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::same_as<T, char>) {
      value_ = static_cast<unsigned char>(value);
    } else if constexpr (std::is_signed_v<T>) {
      if (value < 0) throw InvalidLabelError("negative label value");
      value_ = static_cast<std::uint64_t>(value);
    } else {
      value_ = static_cast<std::uint64_t>(value);
    }
  }

  // Throws InvalidLabelError unless `text` is exactly one code point.
  Label(std::string_view text);  // NOLINT(google-explicit-constructor)
  Label(const char* text) : Label(std::string_view(text)) {}  // NOLINT

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool is_epsilon() const { return value_ == 0; }

  friend constexpr auto operator<=>(Label, Label) = default;

 private:
  std::uint64_t value_ = 0;
};

inline constexpr Label kEpsilon{0u};

// Decodes UTF-8 into code-point labels. Throws InvalidLabelError on a
// malformed sequence.
std::vector<Label> LabelsFromUtf8(std::string_view text);

// Appends the UTF-8 encoding of `code_point` to `out`.
void AppendUtf8(std::uint64_t code_point, std::string& out);

// A label is printable when it is a non-space, non-control Unicode scalar.
bool IsPrintableLabel(Label label);

// Renders a label sequence as text when every label is printable, otherwise
// as a bracketed list of integers, e.g. "[104 0 7]".
std::string LabelsToDisplay(const std::vector<Label>& labels);

}  // namespace wfst

template <>
struct std::hash<wfst::Label> {
  std::size_t operator()(wfst::Label label) const noexcept {
    return std::hash<std::uint64_t>{}(label.value());
  }
};

#endif  // WFST_LABEL_H_
