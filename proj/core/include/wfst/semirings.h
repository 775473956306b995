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
//
// The built-in boolean and numeric semirings.

#ifndef WFST_SEMIRINGS_H_
#define WFST_SEMIRINGS_H_

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <string_view>

#include "wfst/semiring.h"

namespace wfst {

namespace detail {

std::string FormatDouble(double value);
double ParseDouble(std::string_view text);
double QuantizeDouble(double value, double delta);

inline std::size_t HashDouble(double value) {
  // +0.0 and -0.0 compare equal and must hash equally.
  return value == 0.0 ? 0 : std::hash<double>{}(value);
}

inline bool ApproxEqualDouble(double a, double b, double delta) {
  if (a == b) return true;
  return std::fabs(a - b) <= delta;
}

}  // namespace detail

struct BooleanWeight {
  bool value = false;

  constexpr BooleanWeight() = default;
  constexpr explicit BooleanWeight(bool v) : value(v) {}

  friend constexpr bool operator==(BooleanWeight, BooleanWeight) = default;
};

// ⟨∨, ∧, false, true⟩. The default semiring; FSTs over it are cast
// automatically when combined with FSTs over another semiring.
class BooleanSemiring {
 public:
  using Weight = BooleanWeight;

  SemiringDescriptor descriptor() const {
    return {.name = "boolean",
            .properties = kBaseProperty | kPathProperty,
            .has_division = true,
            .has_power = true,
            .is_boolean = true};
  }

  Weight Zero() const { return Weight(false); }
  Weight One() const { return Weight(true); }
  Weight Plus(Weight a, Weight b) const { return Weight(a.value || b.value); }
  Weight Times(Weight a, Weight b) const { return Weight(a.value && b.value); }
  Weight Divide(Weight a, Weight b) const {
    if (!b.value) throw DomainError("boolean division by false");
    return a;
  }
  bool Equal(Weight a, Weight b) const { return a == b; }
  std::size_t Hash(Weight a) const { return a.value ? 1 : 0; }
  bool ApproxEqual(Weight a, Weight b, double = kDelta) const {
    return a == b;
  }
  Weight Quantize(Weight a, double = kDelta) const { return a; }
  bool Member(Weight) const { return true; }
  Weight Reverse(Weight a) const { return a; }
  double SamplingWeight(Weight a) const { return a.value ? 1.0 : 0.0; }
  std::string ToString(Weight a) const { return a.value ? "1" : "0"; }
  Weight Parse(std::string_view text) const;
  Weight Random(std::mt19937_64& rng) const {
    return Weight((rng() & 1u) != 0);
  }

  friend bool operator==(const BooleanSemiring&,
                         const BooleanSemiring&) = default;
};

// Shared helpers for semirings whose weights are doubles.
class NumericSemiringBase {
 public:
  using Weight = double;

  bool Equal(double a, double b) const { return a == b; }
  std::size_t Hash(double a) const { return detail::HashDouble(a); }
  bool ApproxEqual(double a, double b, double delta = kDelta) const {
    return detail::ApproxEqualDouble(a, b, delta);
  }
  double Quantize(double a, double delta = kDelta) const {
    return detail::QuantizeDouble(a, delta);
  }
  double Reverse(double a) const { return a; }
  std::string ToString(double a) const { return detail::FormatDouble(a); }
  double Parse(std::string_view text) const {
    return detail::ParseDouble(text);
  }
};

// ⟨+, ×, 0, 1⟩ over finite reals.
class RealSemiring : public NumericSemiringBase {
 public:
  SemiringDescriptor descriptor() const {
    return {.name = "real", .has_division = true, .has_power = true};
  }

  double Zero() const { return 0.0; }
  double One() const { return 1.0; }
  double Plus(double a, double b) const { return a + b; }
  double Times(double a, double b) const { return a * b; }
  double Divide(double a, double b) const {
    if (b == 0.0) throw DomainError("real division by zero");
    return a / b;
  }
  bool Member(double a) const { return std::isfinite(a); }
  double SamplingWeight(double a) const { return a; }
  double Random(std::mt19937_64& rng) const {
    const auto pick = rng() % 10;
    if (pick == 0) return 0.0;
    if (pick == 1) return 1.0;
    return std::uniform_real_distribution<double>(-2.0, 2.0)(rng);
  }

  friend bool operator==(const RealSemiring&, const RealSemiring&) {
    return true;
  }
};

// ⟨min, +, +∞, 0⟩. MinSemiring and TropicalSemiring are the same algebra
// under different names.
template <class Tag>
class MinPlusSemiring : public NumericSemiringBase {
 public:
  SemiringDescriptor descriptor() const {
    return {.name = Tag::kName,
            .properties = kBaseProperty | kPathProperty,
            .has_division = true,
            .has_power = true};
  }

  double Zero() const { return std::numeric_limits<double>::infinity(); }
  double One() const { return 0.0; }
  double Plus(double a, double b) const { return b < a ? b : a; }
  double Times(double a, double b) const {
    if (a == Zero() || b == Zero()) return Zero();
    return a + b;
  }
  double Divide(double a, double b) const {
    if (b == Zero()) throw DomainError(std::string(Tag::kName) +
                                       " division by zero (+inf)");
    if (a == Zero()) return Zero();
    return a - b;
  }
  bool Member(double a) const {
    return !std::isnan(a) && a != -std::numeric_limits<double>::infinity();
  }
  // Costs map to probabilities.
  double SamplingWeight(double a) const { return std::exp(-a); }
  double Random(std::mt19937_64& rng) const {
    const auto pick = rng() % 10;
    if (pick == 0) return Zero();
    if (pick == 1) return One();
    return std::uniform_real_distribution<double>(-5.0, 10.0)(rng);
  }

  friend bool operator==(const MinPlusSemiring&, const MinPlusSemiring&) {
    return true;
  }
};

struct MinTag {
  static constexpr std::string_view kName = "min";
};
struct TropicalTag {
  static constexpr std::string_view kName = "tropical";
};

using MinSemiring = MinPlusSemiring<MinTag>;
using TropicalSemiring = MinPlusSemiring<TropicalTag>;

// ⟨max, +, −∞, 0⟩.
class MaxSemiring : public NumericSemiringBase {
 public:
  SemiringDescriptor descriptor() const {
    return {.name = "max",
            .properties = kBaseProperty | kPathProperty,
            .has_division = true,
            .has_power = true};
  }

  double Zero() const { return -std::numeric_limits<double>::infinity(); }
  double One() const { return 0.0; }
  double Plus(double a, double b) const { return b > a ? b : a; }
  double Times(double a, double b) const {
    if (a == Zero() || b == Zero()) return Zero();
    return a + b;
  }
  double Divide(double a, double b) const {
    if (b == Zero()) throw DomainError("max division by zero (-inf)");
    if (a == Zero()) return Zero();
    return a - b;
  }
  bool Member(double a) const {
    return !std::isnan(a) && a != std::numeric_limits<double>::infinity();
  }
  double SamplingWeight(double a) const { return std::exp(a); }
  double Random(std::mt19937_64& rng) const {
    const auto pick = rng() % 10;
    if (pick == 0) return Zero();
    if (pick == 1) return One();
    return std::uniform_real_distribution<double>(-10.0, 5.0)(rng);
  }

  friend bool operator==(const MaxSemiring&, const MaxSemiring&) {
    return true;
  }
};

static_assert(RandomSemiring<BooleanSemiring>);
static_assert(RandomSemiring<RealSemiring>);
static_assert(RandomSemiring<MinSemiring>);
static_assert(RandomSemiring<MaxSemiring>);
static_assert(RandomSemiring<TropicalSemiring>);

}  // namespace wfst

#endif  // WFST_SEMIRINGS_H_
