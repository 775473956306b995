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

#ifndef WFST_PUSH_H_
#define WFST_PUSH_H_

#include <string_view>
#include <vector>

#include "wfst/fst.h"
#include "wfst/shortest_distance.h"
#include "wfst/transform.h"

namespace wfst {

enum class PushDirection { kInitial, kFinal };

// Accepts "initial" or "final".
PushDirection ParsePushDirection(std::string_view name);

// Reweights with state potentials so that weight moves toward the initial
// state (potential = distance to final) or toward the final states
// (potential = distance from initial). Path weights are unchanged. States
// with zero potential lie on no accepting path and keep their weights.
template <Semiring S>
Fst<S> Push(const Fst<S>& fst, PushDirection direction,
            const ShortestDistanceOptions& options = {}) {
  const S& sr = fst.semiring();
  if (!sr.descriptor().has_division) {
    throw UnsupportedOperationError(
        "push: " + std::string(sr.descriptor().name) +
        " semiring lacks division");
  }
  std::vector<WeightOf<S>> potential =
      direction == PushDirection::kInitial
          ? ShortestDistanceToFinal(fst, options)
          : ShortestDistance(fst, options);
  std::vector<bool> live(potential.size());
  for (std::size_t i = 0; i < potential.size(); ++i) {
    live[i] = !IsZero(sr, potential[i]);
  }

  Fst<S> out = Copy(fst);
  for (StateId s = 0; s < out.NumStates(); ++s) {
    const auto i = static_cast<std::size_t>(s);
    if (!live[i]) continue;
    for (auto& arc : out.MutableArcs(s)) {
      const auto j = static_cast<std::size_t>(arc.target);
      if (!live[j]) continue;
      if (direction == PushDirection::kInitial) {
        // V(p)^-1 ⊗ w ⊗ V(q)
        arc.weight = sr.Divide(sr.Times(arc.weight, potential[j]), potential[i]);
      } else {
        // α(p) ⊗ w ⊗ α(q)^-1
        arc.weight = sr.Divide(sr.Times(potential[i], arc.weight), potential[j]);
      }
    }
  }
  for (const auto& [s, rho] : fst.FinalWeights()) {
    const auto i = static_cast<std::size_t>(s);
    if (!live[i]) continue;
    out.SetFinalWeight(s, direction == PushDirection::kInitial
                              ? sr.Divide(rho, potential[i])
                              : sr.Times(potential[i], rho));
  }

  // Pushing toward the initial state leaves the total weight V(initial)
  // to be reapplied on the initial state's arcs and final weight.
  const auto init = fst.InitialState();
  if (direction == PushDirection::kInitial && init &&
      live[static_cast<std::size_t>(*init)]) {
    const auto& total = potential[static_cast<std::size_t>(*init)];
    for (auto& arc : out.MutableArcs(*init)) {
      arc.weight = sr.Times(total, arc.weight);
    }
    if (out.IsFinal(*init)) {
      out.SetFinalWeight(*init, sr.Times(total, out.FinalWeight(*init)));
    }
  }
  return out;
}

}  // namespace wfst

#endif  // WFST_PUSH_H_
