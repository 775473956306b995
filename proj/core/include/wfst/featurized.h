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
// Featurized semiring: weights are multisets of named features. Counts add
// along a path and take the per-feature maximum across alternative paths.
// A global (or per-semiring) table assigns a real weight to each feature for
// random-path sampling.

#ifndef WFST_FEATURIZED_H_
#define WFST_FEATURIZED_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "wfst/semiring.h"

namespace wfst {

using FeatureCounts = std::map<std::string, std::uint64_t, std::less<>>;
using FeatureWeights = std::unordered_map<std::string, double>;

class FeaturizedWeight {
 public:
  // The empty multiset, which is the multiplicative identity.
  FeaturizedWeight() : hash_(HashKeys(counts_)) {}
  explicit FeaturizedWeight(FeatureCounts counts);
  FeaturizedWeight(
      std::initializer_list<std::pair<const std::string, std::uint64_t>> init)
      : FeaturizedWeight(FeatureCounts(init)) {}

  // The absorbing zero element; distinct from every multiset.
  static FeaturizedWeight ZeroSentinel();

  bool is_zero() const { return zero_; }
  const FeatureCounts& counts() const { return counts_; }
  std::uint64_t count(std::string_view feature) const;
  std::size_t hash() const { return hash_; }

  friend bool operator==(const FeaturizedWeight& a,
                         const FeaturizedWeight& b) {
    return a.zero_ == b.zero_ && a.hash_ == b.hash_ && a.counts_ == b.counts_;
  }

 private:
  static std::size_t HashKeys(const FeatureCounts& counts);

  FeatureCounts counts_;
  bool zero_ = false;
  std::size_t hash_ = 0;
};

// The process-wide table used when a FeaturizedSemiring is built without an
// explicit one. Mutating it while an algorithm samples is undefined.
std::shared_ptr<FeatureWeights> GlobalFeatureWeights();

// True when `name` can appear in the text rendering.
bool IsValidFeatureName(std::string_view name);

class FeaturizedSemiring {
 public:
  using Weight = FeaturizedWeight;

  FeaturizedSemiring();
  explicit FeaturizedSemiring(std::shared_ptr<const FeatureWeights> table);

  const FeatureWeights& table() const { return *table_; }

  SemiringDescriptor descriptor() const {
    return {.name = "featurized", .has_division = true, .has_power = true};
  }

  Weight Zero() const { return Weight::ZeroSentinel(); }
  Weight One() const { return Weight(); }
  Weight Plus(const Weight& a, const Weight& b) const;
  Weight Times(const Weight& a, const Weight& b) const;
  // Multiset difference; a count going negative is a domain error.
  Weight Divide(const Weight& a, const Weight& b) const;
  bool Equal(const Weight& a, const Weight& b) const { return a == b; }
  std::size_t Hash(const Weight& a) const { return a.hash(); }
  // Sum of absolute count differences must not exceed delta.
  bool ApproxEqual(const Weight& a, const Weight& b,
                   double delta = kDelta) const;
  Weight Quantize(const Weight& a, double = kDelta) const { return a; }
  bool Member(const Weight&) const { return true; }
  Weight Reverse(const Weight& a) const { return a; }
  double SamplingWeight(const Weight& a) const;
  // "{name:count,...}" with names sorted; "zero" for the sentinel.
  std::string ToString(const Weight& a) const;
  Weight Parse(std::string_view text) const;
  Weight Random(std::mt19937_64& rng) const;

  friend bool operator==(const FeaturizedSemiring& a,
                         const FeaturizedSemiring& b) {
    return a.table_ == b.table_;
  }

 private:
  std::shared_ptr<const FeatureWeights> table_;
};

static_assert(RandomSemiring<FeaturizedSemiring>);

}  // namespace wfst

#endif  // WFST_FEATURIZED_H_
