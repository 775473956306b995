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

#ifndef WFST_SHORTEST_PATH_H_
#define WFST_SHORTEST_PATH_H_

#include <vector>

#include "wfst/path.h"
#include "wfst/shortest_distance.h"

namespace wfst {

template <class W>
struct ShortestPathResult {
  Path<W> path;
  W distance;
};

// Best accepting path under the natural order of an idempotent semiring,
// a <= b iff a ⊕ b == a. Among paths tied within `delta` the one with the
// lexicographically smallest arc-index sequence wins, restricted to paths
// that visit no state twice.
template <Semiring S>
ShortestPathResult<WeightOf<S>> ShortestPath(
    const Fst<S>& fst, const ShortestDistanceOptions& options = {}) {
  using W = WeightOf<S>;
  const S& sr = fst.semiring();
  if (!sr.descriptor().path()) {
    throw UnsupportedOperationError(
        "shortest_path requires an idempotent (path) semiring; " +
        std::string(sr.descriptor().name) + " is not");
  }
  const auto init = fst.InitialState();
  if (!init) throw NoAcceptingPathError("shortest_path: no initial state");
  const auto beta = ShortestDistanceToFinal(fst, options);
  if (IsZero(sr, beta[static_cast<std::size_t>(*init)])) {
    throw NoAcceptingPathError("shortest_path: no accepting path");
  }

  std::vector<bool> on_path(static_cast<std::size_t>(fst.NumStates()), false);
  std::vector<Arc<W>> arcs;
  on_path[static_cast<std::size_t>(*init)] = true;

  // Depth-first over locally optimal moves; stopping sorts before any arc.
  auto search = [&](auto& self, StateId q) -> bool {
    const W& best = beta[static_cast<std::size_t>(q)];
    if (fst.IsFinal(q) &&
        sr.ApproxEqual(fst.FinalWeight(q), best, options.delta)) {
      return true;
    }
    for (const auto& arc : fst.Arcs(q)) {
      const auto t = static_cast<std::size_t>(arc.target);
      if (on_path[t] || IsZero(sr, beta[t])) continue;
      if (!sr.ApproxEqual(sr.Times(arc.weight, beta[t]), best, options.delta)) {
        continue;
      }
      on_path[t] = true;
      arcs.push_back(arc);
      if (self(self, arc.target)) return true;
      arcs.pop_back();
      on_path[t] = false;
    }
    return false;
  };
  if (!search(search, *init)) {
    throw NoAcceptingPathError(
        "shortest_path: no simple path attains the optimal weight");
  }
  Path<W> path = MakePath(fst, std::move(arcs));
  W distance = path.weight;
  return {std::move(path), std::move(distance)};
}

}  // namespace wfst

#endif  // WFST_SHORTEST_PATH_H_
