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
// Runtime-typed FST for callers (the CLI, file loaders) that learn the
// semiring only from data. Binary operations follow the typed rules: equal
// kinds combine directly, a boolean operand is cast to the other side, and
// any other pairing is a semiring mismatch.

#ifndef WFST_ANY_FST_H_
#define WFST_ANY_FST_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wfst/autodiff.h"
#include "wfst/featurized.h"
#include "wfst/fst.h"
#include "wfst/semirings.h"

namespace wfst {

enum class SemiringKind { kBoolean, kReal, kMin, kMax, kTropical, kFeaturized, kDiff };

// Names in the order of SemiringKind.
const std::vector<std::string_view>& SemiringNames();
std::string_view SemiringName(SemiringKind kind);
// Unknown names raise InvalidArgumentError listing the supported ones.
SemiringKind ParseSemiringKind(std::string_view name);

class AnyFst {
 public:
  using Variant =
      std::variant<Fst<BooleanSemiring>, Fst<RealSemiring>, Fst<MinSemiring>,
                   Fst<MaxSemiring>, Fst<TropicalSemiring>,
                   Fst<FeaturizedSemiring>, Fst<DiffSemiring>>;

  template <Semiring S>
  AnyFst(Fst<S> fst) : fst_(std::move(fst)) {}  // NOLINT: implicit by design

  SemiringKind kind() const { return static_cast<SemiringKind>(fst_.index()); }
  std::string_view semiring_name() const { return SemiringName(kind()); }
  const Variant& variant() const { return fst_; }

  template <class F>
  decltype(auto) Visit(F&& f) const {
    return std::visit(std::forward<F>(f), fst_);
  }

  template <Semiring S>
  const Fst<S>* As() const {
    return std::get_if<Fst<S>>(&fst_);
  }

 private:
  Variant fst_;
};

// An empty machine (no states) over the named semiring.
AnyFst EmptyFst(SemiringKind kind);

AnyFst ParseAnyText(std::string_view text);
std::string RenderAnyText(const AnyFst& fst);

// Acceptor for a UTF-8 string.
AnyFst AnyFromSequence(std::string_view utf8, SemiringKind kind);

AnyFst Union(const AnyFst& a, const AnyFst& b);
AnyFst Concat(const AnyFst& a, const AnyFst& b);
AnyFst Compose(const AnyFst& a, const AnyFst& b);

// How numeric source weights map into the target: copied unchanged, mapped
// to -log(w) (probabilities to costs) or log(w). Boolean sources always map
// true to one and false to zero.
enum class CastMode { kCopy, kNegLog, kLog };
CastMode ParseCastMode(std::string_view name);

AnyFst LiftTo(const AnyFst& fst, SemiringKind target,
              CastMode mode = CastMode::kCopy);

}  // namespace wfst

#endif  // WFST_ANY_FST_H_
