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
// The semiring contract. A semiring here is a small value object that owns
// the algebra, from plus and times to the extended operations, while
// weights are plain values of `S::Weight`. Keeping the algebra in an object
// lets stateful semirings (a gradient tape, a feature-weight table) travel
// with the FST that uses them.

#ifndef WFST_SEMIRING_H_
#define WFST_SEMIRING_H_

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

#include "wfst/errors.h"

namespace wfst {

// Default tolerance for approximate weight comparison.
inline constexpr double kDelta = 1.0 / 1024;

enum SemiringProperty : unsigned {
  kBaseProperty = 1u << 0,
  // Idempotent plus inducing a total order a <= b iff plus(a, b) == a.
  kPathProperty = 1u << 1,
};

struct SemiringDescriptor {
  std::string_view name;
  unsigned properties = kBaseProperty;
  bool has_division = false;
  bool has_power = false;
  bool is_boolean = false;
  bool commutative = true;

  bool path() const { return (properties & kPathProperty) != 0; }

  friend bool operator==(const SemiringDescriptor&,
                         const SemiringDescriptor&) = default;
};

template <class S>
concept Semiring =
    std::copy_constructible<S> && std::equality_comparable<S> &&
    std::copy_constructible<typename S::Weight> &&
    requires(const S& s, const typename S::Weight& a,
             const typename S::Weight& b, double delta,
             std::string_view text) {
      { s.descriptor() } -> std::same_as<SemiringDescriptor>;
      { s.Zero() } -> std::same_as<typename S::Weight>;
      { s.One() } -> std::same_as<typename S::Weight>;
      { s.Plus(a, b) } -> std::same_as<typename S::Weight>;
      { s.Times(a, b) } -> std::same_as<typename S::Weight>;
      { s.Divide(a, b) } -> std::same_as<typename S::Weight>;
      { s.Equal(a, b) } -> std::same_as<bool>;
      { s.Hash(a) } -> std::same_as<std::size_t>;
      { s.ApproxEqual(a, b, delta) } -> std::same_as<bool>;
      { s.Quantize(a, delta) } -> std::same_as<typename S::Weight>;
      { s.Member(a) } -> std::same_as<bool>;
      { s.Reverse(a) } -> std::same_as<typename S::Weight>;
      { s.SamplingWeight(a) } -> std::same_as<double>;
      { s.ToString(a) } -> std::same_as<std::string>;
      { s.Parse(text) } -> std::same_as<typename S::Weight>;
    };

// Semirings that can draw random members, used by the axiom checker and
// property tests.
template <class S>
concept RandomSemiring =
    Semiring<S> && requires(const S& s, std::mt19937_64& rng) {
      { s.Random(rng) } -> std::same_as<typename S::Weight>;
    };

template <Semiring S>
using WeightOf = typename S::Weight;

// a ⊗ a ⊗ ... (n factors) by repeated squaring; n == 0 gives one.
template <Semiring S>
WeightOf<S> Power(const S& semiring, const WeightOf<S>& a, std::uint64_t n) {
  if (!semiring.descriptor().has_power) {
    throw UnsupportedOperationError(
        std::string(semiring.descriptor().name) + " semiring has no power");
  }
  WeightOf<S> result = semiring.One();
  WeightOf<S> base = a;
  while (n > 0) {
    if (n & 1u) result = semiring.Times(result, base);
    n >>= 1;
    if (n > 0) base = semiring.Times(base, base);
  }
  return result;
}

template <Semiring S>
bool IsZero(const S& semiring, const WeightOf<S>& w) {
  return semiring.Equal(w, semiring.Zero());
}

template <Semiring S>
bool IsOne(const S& semiring, const WeightOf<S>& w) {
  return semiring.Equal(w, semiring.One());
}

// Runtime check used by binary operations whose operands carry semiring
// objects that may differ in state (two tapes, two feature tables).
template <Semiring S>
void RequireSameSemiring(const S& a, const S& b, std::string_view op) {
  if (!(a == b)) {
    throw SemiringMismatchError(std::string(op) + ": operands use distinct " +
                                std::string(a.descriptor().name) +
                                " semiring instances");
  }
}

}  // namespace wfst

#endif  // WFST_SEMIRING_H_
