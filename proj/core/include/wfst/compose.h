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
// Composition with a three-state epsilon filter. Output labels of `a` are
// matched against input labels of `b`; a composed path's weight is the
// product of the two contributing path weights. The filter admits exactly
// one composed path per pair of epsilon-interleavings:
//
//   filter 0: any move
//   filter 1: entered after b moved alone on an input epsilon; a may not
//             move alone next
//   filter 2: entered after a moved alone on an output epsilon; b may not
//             move alone next
//
// Both machines moving on epsilon together is allowed only from filter 0.

#ifndef WFST_COMPOSE_H_
#define WFST_COMPOSE_H_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "wfst/fst.h"
#include "wfst/graph.h"
#include "wfst/transform.h"

namespace wfst {

namespace detail {

struct ComposeTuple {
  StateId a;
  StateId b;
  std::uint8_t filter;

  friend bool operator==(const ComposeTuple&, const ComposeTuple&) = default;
};

struct ComposeTupleHash {
  std::size_t operator()(const ComposeTuple& t) const noexcept {
    std::size_t h = std::hash<StateId>{}(t.a);
    h = h * 1000003u ^ std::hash<StateId>{}(t.b);
    return h * 31u + t.filter;
  }
};

}  // namespace detail

// The result is trimmed to states that lie on some accepting path.
template <Semiring S>
Fst<S> Compose(const Fst<S>& a, const Fst<S>& b) {
  RequireSameSemiring(a.semiring(), b.semiring(), "compose");
  const S& sr = a.semiring();
  Fst<S> out(sr);
  const auto init_a = a.InitialState();
  const auto init_b = b.InitialState();
  if (!init_a || !init_b) return out;

  // Per state of b: (input label, arc index) sorted by label, stable.
  std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> by_input(
      static_cast<std::size_t>(b.NumStates()));
  for (StateId s = 0; s < b.NumStates(); ++s) {
    auto& index = by_input[static_cast<std::size_t>(s)];
    const auto arcs = b.Arcs(s);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      index.emplace_back(arcs[i].input.value(), i);
    }
    std::stable_sort(index.begin(), index.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  auto matches = [&](StateId s, std::uint64_t label) {
    const auto& index = by_input[static_cast<std::size_t>(s)];
    return std::equal_range(
        index.begin(), index.end(), std::pair<std::uint64_t, std::size_t>{label, 0},
        [](const auto& x, const auto& y) { return x.first < y.first; });
  };

  std::unordered_map<detail::ComposeTuple, StateId, detail::ComposeTupleHash>
      ids;
  std::vector<detail::ComposeTuple> tuples;
  std::deque<StateId> queue;
  auto state_for = [&](const detail::ComposeTuple& t) {
    const auto [it, inserted] = ids.emplace(t, 0);
    if (inserted) {
      it->second = out.AddState();
      tuples.push_back(t);
      queue.push_back(it->second);
    }
    return it->second;
  };

  out.SetInitialState(state_for({*init_a, *init_b, 0}));
  while (!queue.empty()) {
    const StateId s = queue.front();
    queue.pop_front();
    const detail::ComposeTuple t = tuples[static_cast<std::size_t>(s)];
    if (a.IsFinal(t.a) && b.IsFinal(t.b)) {
      out.SetFinalWeight(s, sr.Times(a.FinalWeight(t.a), b.FinalWeight(t.b)));
    }
    const auto arcs_b = b.Arcs(t.b);
    for (const auto& ea : a.Arcs(t.a)) {
      if (ea.output.is_epsilon()) {
        // a moves alone.
        if (t.filter != 1) {
          const StateId n = state_for({ea.target, t.b, 2});
          out.AddArc(s, n, ea.input, kEpsilon, ea.weight);
        }
        // Both move on epsilon.
        if (t.filter == 0) {
          const auto [lo, hi] = matches(t.b, 0);
          for (auto it = lo; it != hi; ++it) {
            const auto& eb = arcs_b[it->second];
            const StateId n = state_for({ea.target, eb.target, 0});
            out.AddArc(s, n, ea.input, eb.output,
                       sr.Times(ea.weight, eb.weight));
          }
        }
        continue;
      }
      const auto [lo, hi] = matches(t.b, ea.output.value());
      for (auto it = lo; it != hi; ++it) {
        const auto& eb = arcs_b[it->second];
        const StateId n = state_for({ea.target, eb.target, 0});
        out.AddArc(s, n, ea.input, eb.output, sr.Times(ea.weight, eb.weight));
      }
    }
    // b moves alone.
    if (t.filter != 2) {
      const auto [lo, hi] = matches(t.b, 0);
      for (auto it = lo; it != hi; ++it) {
        const auto& eb = arcs_b[it->second];
        const StateId n = state_for({t.a, eb.target, 1});
        out.AddArc(s, n, kEpsilon, eb.output, eb.weight);
      }
    }
  }
  return Connect(out);
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Compose(const Fst<BooleanSemiring>& a, const Fst<S>& b) {
  return Compose(CastFromBoolean(a, b.semiring()), b);
}

template <Semiring S>
  requires(!std::same_as<S, BooleanSemiring>)
Fst<S> Compose(const Fst<S>& a, const Fst<BooleanSemiring>& b) {
  return Compose(a, CastFromBoolean(b, a.semiring()));
}

}  // namespace wfst

#endif  // WFST_COMPOSE_H_
