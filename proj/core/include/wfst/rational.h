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
// The rational operations: union and concatenation, plus Kleene closure.

#ifndef WFST_RATIONAL_H_
#define WFST_RATIONAL_H_

#include <vector>

#include "wfst/fst.h"
#include "wfst/transform.h"

namespace wfst {

// Accepts L(a) ∪ L(b). When nothing re-enters a's initial state, that state
// is reused and gets an epsilon arc to b's initial state; otherwise a fresh
// initial state with epsilon arcs to both is added.
template <Semiring S>
Fst<S> Union(const Fst<S>& a, const Fst<S>& b) {
  RequireSameSemiring(a.semiring(), b.semiring(), "union");
  const S& sr = a.semiring();
  Fst<S> out = Copy(a);
  const StateId offset = detail::AppendStates(out, b);
  const auto init_b = b.InitialState();
  const auto init_a = a.InitialState();
  if (!init_b) return out;
  if (!init_a) {
    out.SetInitialState(*init_b + offset);
    return out;
  }
  bool reentered = false;
  for (StateId s = 0; s < a.NumStates() && !reentered; ++s) {
    for (const auto& arc : a.Arcs(s)) {
      if (arc.target == *init_a) {
        reentered = true;
        break;
      }
    }
  }
  if (!reentered) {
    out.AddArc(*init_a, *init_b + offset, kEpsilon, kEpsilon, sr.One());
    return out;
  }
  const StateId start = out.AddState();
  out.AddArc(start, *init_a, kEpsilon, kEpsilon, sr.One());
  out.AddArc(start, *init_b + offset, kEpsilon, kEpsilon, sr.One());
  out.SetInitialState(start);
  return out;
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Union(const Fst<BooleanSemiring>& a, const Fst<S>& b) {
  return Union(CastFromBoolean(a, b.semiring()), b);
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Union(const Fst<S>& a, const Fst<BooleanSemiring>& b) {
  return Union(a, CastFromBoolean(b, a.semiring()));
}

// Accepts {xy : x ∈ L(a), y ∈ L(b)}; each final state of a is joined to b's
// initial state by an epsilon arc carrying its final weight.
template <Semiring S>
Fst<S> Concat(const Fst<S>& a, const Fst<S>& b) {
  RequireSameSemiring(a.semiring(), b.semiring(), "concat");
  Fst<S> out = Copy(a);
  const std::vector<std::pair<StateId, WeightOf<S>>> finals_a(
      a.FinalWeights().begin(), a.FinalWeights().end());
  for (const auto& [s, w] : finals_a) out.SetFinalWeight(s, a.semiring().Zero());
  const StateId offset = detail::AppendStates(out, b);
  if (const auto init_b = b.InitialState()) {
    for (const auto& [s, w] : finals_a) {
      out.AddArc(s, *init_b + offset, kEpsilon, kEpsilon, w);
    }
  }
  return out;
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Concat(const Fst<BooleanSemiring>& a, const Fst<S>& b) {
  return Concat(CastFromBoolean(a, b.semiring()), b);
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Concat(const Fst<S>& a, const Fst<BooleanSemiring>& b) {
  return Concat(a, CastFromBoolean(b, a.semiring()));
}

// Kleene star. A new initial state, final with one, starts the machine;
// every final state loops back to the old initial state.
template <Semiring S>
Fst<S> Closure(const Fst<S>& a) {
  const S& sr = a.semiring();
  Fst<S> out = Copy(a);
  const StateId start = out.AddState();
  out.SetInitialState(start);
  out.SetFinalWeight(start, sr.One());
  if (const auto init = a.InitialState()) {
    out.AddArc(start, *init, kEpsilon, kEpsilon, sr.One());
    for (const auto& [s, w] : a.FinalWeights()) {
      out.AddArc(s, *init, kEpsilon, kEpsilon, w);
    }
  }
  return out;
}

}  // namespace wfst

#endif  // WFST_RATIONAL_H_
