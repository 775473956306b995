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
// Generic single-source shortest distance: d[q] = ⊕ over paths from the
// sources to q of the ⊗-path weight. Acyclic inputs are solved exactly with
// one pass in topological order; cyclic inputs use queue-based relaxation
// with residual weights that stops once every distance is stable to within
// `delta`, or fails after `max_sweeps` passes worth of relaxations.

#ifndef WFST_SHORTEST_DISTANCE_H_
#define WFST_SHORTEST_DISTANCE_H_

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "wfst/fst.h"
#include "wfst/graph.h"

namespace wfst {

struct ShortestDistanceOptions {
  double delta = kDelta;
  std::size_t max_sweeps = 1000;
};

namespace detail {

inline constexpr auto kAnyArc = [](const auto&) { return true; };

// Reusable distance solver over the arcs selected by a filter, in either
// direction. Reverse mode computes d[p] = ⊕ w(e) ⊗ d[target(e)].
template <Semiring S>
class DistanceSolver {
 public:
  using W = WeightOf<S>;

  template <class ArcFilter>
  DistanceSolver(const Fst<S>& fst, ArcFilter use_arc, bool reverse,
                 ShortestDistanceOptions options)
      : fst_(fst), reverse_(reverse), options_(options) {
    const auto n = static_cast<std::size_t>(fst.NumStates());
    adjacency_.resize(n);
    for (StateId s = 0; s < fst.NumStates(); ++s) {
      for (const auto& arc : fst.Arcs(s)) {
        if (!use_arc(arc)) continue;
        const StateId from = reverse ? arc.target : arc.source;
        adjacency_[static_cast<std::size_t>(from)].push_back(&arc);
      }
    }
    order_ = TopologicalOrder(fst, use_arc);
    if (order_ && reverse) std::reverse(order_->begin(), order_->end());
  }

  bool acyclic() const { return order_.has_value(); }

  // Unreached states hold zero; `reached` marks the rest.
  std::vector<W> Run(const std::vector<std::pair<StateId, W>>& seeds,
                     std::vector<bool>* reached_out = nullptr) const {
    const S& sr = fst_.semiring();
    const auto n = adjacency_.size();
    std::vector<W> dist(n, sr.Zero());
    std::vector<bool> reached(n, false);
    for (const auto& [s, w] : seeds) {
      const auto i = static_cast<std::size_t>(s);
      dist[i] = reached[i] ? sr.Plus(dist[i], w) : w;
      reached[i] = true;
    }
    if (order_) {
      for (const StateId s : *order_) {
        const auto i = static_cast<std::size_t>(s);
        if (!reached[i]) continue;
        for (const auto* arc : adjacency_[i]) Relax(dist, reached, i, *arc);
      }
    } else {
      RunQueue(dist, reached, seeds);
    }
    if (reached_out) *reached_out = std::move(reached);
    return dist;
  }

 private:
  StateId Next(const Arc<W>& arc) const {
    return reverse_ ? arc.source : arc.target;
  }

  W Extend(const W& from, const Arc<W>& arc) const {
    const S& sr = fst_.semiring();
    return reverse_ ? sr.Times(arc.weight, from) : sr.Times(from, arc.weight);
  }

  void Relax(std::vector<W>& dist, std::vector<bool>& reached, std::size_t i,
             const Arc<W>& arc) const {
    const auto j = static_cast<std::size_t>(Next(arc));
    W contribution = Extend(dist[i], arc);
    dist[j] = reached[j] ? fst_.semiring().Plus(dist[j], contribution)
                         : std::move(contribution);
    reached[j] = true;
  }

  void RunQueue(std::vector<W>& dist, std::vector<bool>& reached,
                const std::vector<std::pair<StateId, W>>& seeds) const {
    const S& sr = fst_.semiring();
    const auto n = adjacency_.size();
    std::vector<W> residual(n, sr.Zero());
    std::vector<bool> queued(n, false);
    std::deque<StateId> queue;
    for (const auto& [s, w] : seeds) {
      const auto i = static_cast<std::size_t>(s);
      residual[i] = sr.Plus(residual[i], w);
      if (!queued[i]) {
        queued[i] = true;
        queue.push_back(s);
      }
    }
    const std::size_t limit = options_.max_sweeps * std::max<std::size_t>(n, 1);
    std::size_t pops = 0;
    while (!queue.empty()) {
      if (++pops > limit) {
        throw ConvergenceError(
            "shortest distance did not converge within " +
            std::to_string(options_.max_sweeps) + " sweeps (" +
            std::string(sr.descriptor().name) + " semiring, delta " +
            std::to_string(options_.delta) + ")");
      }
      const StateId q = queue.front();
      queue.pop_front();
      const auto i = static_cast<std::size_t>(q);
      queued[i] = false;
      const W r = residual[i];
      residual[i] = sr.Zero();
      for (const auto* arc : adjacency_[i]) {
        const auto j = static_cast<std::size_t>(Next(*arc));
        const W contribution = Extend(r, *arc);
        const W updated =
            reached[j] ? sr.Plus(dist[j], contribution) : contribution;
        if (!reached[j] || !sr.ApproxEqual(dist[j], updated, options_.delta)) {
          reached[j] = true;
          dist[j] = updated;
          residual[j] = sr.Plus(residual[j], contribution);
          if (!queued[j]) {
            queued[j] = true;
            queue.push_back(Next(*arc));
          }
        }
      }
    }
  }

  const Fst<S>& fst_;
  bool reverse_;
  ShortestDistanceOptions options_;
  std::vector<std::vector<const Arc<W>*>> adjacency_;
  std::optional<std::vector<StateId>> order_;
};

}  // namespace detail

// Distance from the initial state to every state; zero where unreachable.
template <Semiring S>
std::vector<WeightOf<S>> ShortestDistance(
    const Fst<S>& fst, const ShortestDistanceOptions& options = {}) {
  const auto init = fst.InitialState();
  if (!init) {
    return std::vector<WeightOf<S>>(static_cast<std::size_t>(fst.NumStates()),
                                    fst.semiring().Zero());
  }
  detail::DistanceSolver<S> solver(fst, detail::kAnyArc,
                                   /*reverse=*/false, options);
  return solver.Run({{*init, fst.semiring().One()}});
}

// Distance from every state to the final states, final weights included.
template <Semiring S>
std::vector<WeightOf<S>> ShortestDistanceToFinal(
    const Fst<S>& fst, const ShortestDistanceOptions& options = {}) {
  std::vector<std::pair<StateId, WeightOf<S>>> seeds(
      fst.FinalWeights().begin(), fst.FinalWeights().end());
  detail::DistanceSolver<S> solver(fst, detail::kAnyArc,
                                   /*reverse=*/true, options);
  return solver.Run(seeds);
}

// ⊕ over all accepting paths; zero for an empty language.
template <Semiring S>
WeightOf<S> SumPaths(const Fst<S>& fst,
                     const ShortestDistanceOptions& options = {}) {
  const S& sr = fst.semiring();
  const auto init = fst.InitialState();
  if (!init) return sr.Zero();
  detail::DistanceSolver<S> solver(fst, detail::kAnyArc, /*reverse=*/false,
                                   options);
  std::vector<bool> reached;
  const auto dist = solver.Run({{*init, sr.One()}}, &reached);
  std::optional<WeightOf<S>> total;
  for (const auto& [s, rho] : fst.FinalWeights()) {
    const auto i = static_cast<std::size_t>(s);
    if (!reached[i]) continue;
    WeightOf<S> term = sr.Times(dist[i], rho);
    total = total ? sr.Plus(*total, term) : std::move(term);
  }
  return total ? *total : sr.Zero();
}

}  // namespace wfst

#endif  // WFST_SHORTEST_DISTANCE_H_
