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
// Unary structural transforms and semiring conversion. All functions return
// a new FST and leave their input untouched.

#ifndef WFST_TRANSFORM_H_
#define WFST_TRANSFORM_H_

#include <string>
#include <string_view>
#include <utility>

#include "wfst/fst.h"

namespace wfst {

namespace detail {

// Appends a renumbered copy of `src` to `dst`, returning the id offset
// applied to `src`'s states. The initial state is not copied.
template <Semiring S>
StateId AppendStates(Fst<S>& dst, const Fst<S>& src) {
  const StateId offset = dst.NumStates();
  for (StateId s = 0; s < src.NumStates(); ++s) dst.AddState();
  for (StateId s = 0; s < src.NumStates(); ++s) {
    for (const auto& arc : src.Arcs(s)) {
      dst.AddArc(s + offset, arc.target + offset, arc.input, arc.output,
                 arc.weight);
    }
  }
  for (const auto& [s, w] : src.FinalWeights()) dst.SetFinalWeight(s + offset, w);
  return offset;
}

}  // namespace detail

template <Semiring S>
Fst<S> Copy(const Fst<S>& fst) {
  Fst<S> out(fst.semiring());
  detail::AppendStates(out, fst);
  if (const auto init = fst.InitialState()) out.SetInitialState(*init);
  return out;
}

enum class ProjectSide { kInput, kOutput };

// Accepts "input" or "output".
ProjectSide ParseProjectSide(std::string_view name);

template <Semiring S>
Fst<S> Project(const Fst<S>& fst, ProjectSide side) {
  Fst<S> out = Copy(fst);
  for (StateId s = 0; s < out.NumStates(); ++s) {
    for (auto& arc : out.MutableArcs(s)) {
      const Label keep = side == ProjectSide::kInput ? arc.input : arc.output;
      arc.input = keep;
      arc.output = keep;
    }
  }
  return out;
}

template <Semiring S>
Fst<S> Invert(const Fst<S>& fst) {
  Fst<S> out = Copy(fst);
  for (StateId s = 0; s < out.NumStates(); ++s) {
    for (auto& arc : out.MutableArcs(s)) std::swap(arc.input, arc.output);
  }
  return out;
}

// Arc-reversed machine. State 0 is a new initial state with epsilon arcs to
// every former final state; old state s becomes s + 1; the former initial
// state becomes the only final state.
template <Semiring S>
Fst<S> Reverse(const Fst<S>& fst) {
  const S& sr = fst.semiring();
  Fst<S> out(sr);
  const StateId start = out.AddState();
  for (StateId s = 0; s < fst.NumStates(); ++s) out.AddState();
  out.SetInitialState(start);
  for (const auto& [s, w] : fst.FinalWeights()) {
    out.AddArc(start, s + 1, kEpsilon, kEpsilon, sr.Reverse(w));
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      out.AddArc(arc.target + 1, s + 1, arc.input, arc.output,
                 sr.Reverse(arc.weight));
    }
  }
  if (const auto init = fst.InitialState()) {
    out.SetFinalWeight(*init + 1, sr.One());
  }
  return out;
}

// Rebuilds `fst` over `target`, mapping every weight through `cast`.
// Topology is unchanged; final weights that cast to zero become non-final.
template <Semiring T, Semiring S, class Cast>
Fst<T> Lift(const Fst<S>& fst, T target, Cast&& cast) {
  Fst<T> out(std::move(target));
  const T& tr = out.semiring();
  auto convert = [&](const WeightOf<S>& w) {
    WeightOf<T> converted = cast(w);
    if (!tr.Member(converted)) {
      throw InvalidWeightError(
          "lift to " + std::string(tr.descriptor().name) + ": weight " +
          fst.semiring().ToString(w) + " maps to non-member " +
          tr.ToString(converted));
    }
    return converted;
  };
  for (StateId s = 0; s < fst.NumStates(); ++s) out.AddState();
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      out.AddArc(s, arc.target, arc.input, arc.output, convert(arc.weight));
    }
  }
  for (const auto& [s, w] : fst.FinalWeights()) out.SetFinalWeight(s, convert(w));
  if (const auto init = fst.InitialState()) out.SetInitialState(*init);
  return out;
}

// The implicit conversion applied whenever a boolean FST meets another
// semiring: true maps to one, false to zero.
template <Semiring T>
Fst<T> CastFromBoolean(const Fst<BooleanSemiring>& fst, T target = T()) {
  const T copy = target;
  return Lift(fst, std::move(target), [&copy](BooleanWeight w) {
    return w.value ? copy.One() : copy.Zero();
  });
}

}  // namespace wfst

#endif  // WFST_TRANSFORM_H_
