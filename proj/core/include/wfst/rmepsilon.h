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

#ifndef WFST_RMEPSILON_H_
#define WFST_RMEPSILON_H_

#include <vector>

#include "wfst/fst.h"
#include "wfst/graph.h"
#include "wfst/shortest_distance.h"

namespace wfst {

// Removes every arc whose input and output are both epsilon. For each state
// p the epsilon-closure distances d(p, q) are computed; p then receives each
// non-epsilon arc of q with weight d(p, q) ⊗ w and final weight
// ⊕_q d(p, q) ⊗ ρ(q). The result is trimmed.
//
// Throws ConvergenceError when an epsilon cycle does not converge.
template <Semiring S>
Fst<S> RemoveEpsilon(const Fst<S>& fst,
                     const ShortestDistanceOptions& options = {}) {
  using W = WeightOf<S>;
  const S& sr = fst.semiring();
  auto is_eps = [](const Arc<W>& arc) {
    return arc.input.is_epsilon() && arc.output.is_epsilon();
  };
  detail::DistanceSolver<S> closure(fst, is_eps, /*reverse=*/false, options);

  Fst<S> out(sr);
  for (StateId s = 0; s < fst.NumStates(); ++s) out.AddState();
  if (const auto init = fst.InitialState()) out.SetInitialState(*init);

  std::vector<bool> reached;
  for (StateId p = 0; p < fst.NumStates(); ++p) {
    const auto dist = closure.Run({{p, sr.One()}}, &reached);
    std::optional<W> final_weight;
    for (StateId q = 0; q < fst.NumStates(); ++q) {
      const auto i = static_cast<std::size_t>(q);
      if (!reached[i]) continue;
      for (const auto& arc : fst.Arcs(q)) {
        if (is_eps(arc)) continue;
        out.AddArc(p, arc.target, arc.input, arc.output,
                   sr.Times(dist[i], arc.weight));
      }
      if (fst.IsFinal(q)) {
        W term = sr.Times(dist[i], fst.FinalWeight(q));
        final_weight = final_weight ? sr.Plus(*final_weight, term) : term;
      }
    }
    if (final_weight && sr.Member(*final_weight)) {
      out.SetFinalWeight(p, *final_weight);
    }
  }
  return Connect(out);
}

}  // namespace wfst

#endif  // WFST_RMEPSILON_H_
