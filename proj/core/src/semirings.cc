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

#include "wfst/semirings.h"

#include <charconv>
#include <cmath>
#include <system_error>

namespace wfst {
namespace detail {

std::string FormatDouble(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
    throw InvalidWeightError("cannot parse '" + std::string(text) +
                             "' as a number");
  }
  return value;
}

double QuantizeDouble(double value, double delta) {
  if (!std::isfinite(value) || delta <= 0.0) return value;
  // nearbyint honours the current rounding mode, which defaults to
  // round-half-to-even.
  return std::nearbyint(value / delta) * delta;
}

}  // namespace detail

BooleanWeight BooleanSemiring::Parse(std::string_view text) const {
  if (text == "1" || text == "true") return Weight(true);
  if (text == "0" || text == "false") return Weight(false);
  throw InvalidWeightError("cannot parse '" + std::string(text) +
                           "' as a boolean weight");
}

}  // namespace wfst
