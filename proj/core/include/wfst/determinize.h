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
// Weighted subset construction for acceptors. Each result state is a set of
// (input state, residual weight) pairs; for every label the arc weight is
// the ⊕ of all contributions, and each residual is its contribution divided
// by that arc weight. Subsets are identified after quantizing residuals.

#ifndef WFST_DETERMINIZE_H_
#define WFST_DETERMINIZE_H_

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wfst/fst.h"
#include "wfst/shortest_distance.h"

namespace wfst {

struct DeterminizeOptions {
  double delta = kDelta;
  // Result size cap is state_factor * input states + state_offset.
  std::size_t state_factor = 10;
  std::size_t state_offset = 1000;
};

template <Semiring S>
Fst<S> Determinize(const Fst<S>& fst, const DeterminizeOptions& options = {}) {
  using W = WeightOf<S>;
  using Subset = std::vector<std::pair<StateId, W>>;
  const S& sr = fst.semiring();

  if (!fst.IsAcceptor()) {
    throw UnsupportedOperationError(
        "determinize requires an acceptor; project the transducer first");
  }
  bool weighted = false;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      if (arc.input.is_epsilon()) {
        throw InvalidArgumentError(
            "determinize: epsilon arc at state " + std::to_string(s) +
            "; call remove_epsilon first");
      }
      weighted = weighted || !IsOne(sr, arc.weight);
    }
  }
  for (const auto& [s, w] : fst.FinalWeights()) weighted = weighted || !IsOne(sr, w);
  const bool divide = sr.descriptor().has_division;
  if (!divide && (weighted || !sr.descriptor().path())) {
    throw UnsupportedOperationError(
        "determinize: " + std::string(sr.descriptor().name) +
        " semiring lacks division");
  }

  Fst<S> out(sr);
  const auto init = fst.InitialState();
  if (!init) return out;

  const std::size_t cap =
      options.state_factor * static_cast<std::size_t>(fst.NumStates()) +
      options.state_offset;

  struct KeyHash {
    const S* sr;
    double delta;
    std::size_t operator()(const Subset& key) const {
      std::size_t h = key.size();
      for (const auto& [s, w] : key) {
        h = h * 1000003u ^ (std::hash<StateId>{}(s) * 31u + sr->Hash(w));
      }
      return h;
    }
  };
  struct KeyEqual {
    const S* sr;
    bool operator()(const Subset& x, const Subset& y) const {
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].first != y[i].first || !sr->Equal(x[i].second, y[i].second)) {
          return false;
        }
      }
      return true;
    }
  };
  std::unordered_map<Subset, StateId, KeyHash, KeyEqual> ids(
      16, KeyHash{&sr, options.delta}, KeyEqual{&sr});
  std::vector<Subset> subsets;
  std::deque<StateId> queue;

  auto state_for = [&](Subset subset) {
    Subset key;
    key.reserve(subset.size());
    for (const auto& [s, w] : subset) {
      key.emplace_back(s, sr.Quantize(w, options.delta));
    }
    const auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    const StateId id = out.AddState();
    if (static_cast<std::size_t>(out.NumStates()) > cap) {
      throw DeterminizationLimitError(
          "determinize: subset construction exceeded " + std::to_string(cap) +
          " states; the input may not be determinizable");
    }
    ids.emplace(std::move(key), id);
    subsets.push_back(std::move(subset));
    queue.push_back(id);
    return id;
  };

  out.SetInitialState(state_for({{*init, sr.One()}}));
  while (!queue.empty()) {
    const StateId id = queue.front();
    queue.pop_front();
    const Subset current = subsets[static_cast<std::size_t>(id)];

    std::optional<W> final_weight;
    for (const auto& [s, residual] : current) {
      if (!fst.IsFinal(s)) continue;
      W term = sr.Times(residual, fst.FinalWeight(s));
      final_weight = final_weight ? sr.Plus(*final_weight, term) : term;
    }
    if (final_weight) out.SetFinalWeight(id, *final_weight);

    // label -> target -> accumulated contribution
    std::map<std::uint64_t, std::map<StateId, W>> moves;
    for (const auto& [s, residual] : current) {
      for (const auto& arc : fst.Arcs(s)) {
        auto& targets = moves[arc.input.value()];
        W contribution = sr.Times(residual, arc.weight);
        const auto it = targets.find(arc.target);
        if (it == targets.end()) {
          targets.emplace(arc.target, std::move(contribution));
        } else {
          it->second = sr.Plus(it->second, contribution);
        }
      }
    }
    for (const auto& [label, targets] : moves) {
      std::optional<W> total;
      for (const auto& [t, w] : targets) total = total ? sr.Plus(*total, w) : w;
      if (IsZero(sr, *total)) continue;
      Subset next;
      for (const auto& [t, w] : targets) {
        if (IsZero(sr, w)) continue;
        next.emplace_back(t, divide ? sr.Divide(w, *total) : w);
      }
      const StateId target = state_for(std::move(next));
      out.AddArc(id, target, Label(label), Label(label), *total);
    }
  }
  return out;
}

}  // namespace wfst

#endif  // WFST_DETERMINIZE_H_
