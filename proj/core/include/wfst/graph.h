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
// Reachability and topological ordering helpers.

#ifndef WFST_GRAPH_H_
#define WFST_GRAPH_H_

#include <optional>
#include <vector>

#include "wfst/fst.h"

namespace wfst {

template <Semiring S>
std::vector<bool> Accessible(const Fst<S>& fst) {
  std::vector<bool> seen(static_cast<std::size_t>(fst.NumStates()), false);
  const auto init = fst.InitialState();
  if (!init) return seen;
  std::vector<StateId> stack{*init};
  seen[static_cast<std::size_t>(*init)] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const auto& arc : fst.Arcs(s)) {
      const auto t = static_cast<std::size_t>(arc.target);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(arc.target);
      }
    }
  }
  return seen;
}

// States from which some final state is reachable.
template <Semiring S>
std::vector<bool> Coaccessible(const Fst<S>& fst) {
  const auto n = static_cast<std::size_t>(fst.NumStates());
  std::vector<std::vector<StateId>> incoming(n);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      incoming[static_cast<std::size_t>(arc.target)].push_back(s);
    }
  }
  std::vector<bool> seen(n, false);
  std::vector<StateId> stack;
  for (const auto& [s, w] : fst.FinalWeights()) {
    seen[static_cast<std::size_t>(s)] = true;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const StateId p : incoming[static_cast<std::size_t>(s)]) {
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

// Keeps only states that are both accessible and coaccessible, renumbered in
// their original order. An FST with an empty language comes back with no
// states.
template <Semiring S>
Fst<S> Connect(const Fst<S>& fst) {
  const auto acc = Accessible(fst);
  const auto coacc = Coaccessible(fst);
  std::vector<StateId> remap(static_cast<std::size_t>(fst.NumStates()), -1);
  Fst<S> out(fst.semiring());
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    const auto i = static_cast<std::size_t>(s);
    if (acc[i] && coacc[i]) remap[i] = out.AddState();
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    const StateId ns = remap[static_cast<std::size_t>(s)];
    if (ns < 0) continue;
    for (const auto& arc : fst.Arcs(s)) {
      const StateId nt = remap[static_cast<std::size_t>(arc.target)];
      if (nt >= 0) out.AddArc(ns, nt, arc.input, arc.output, arc.weight);
    }
    if (fst.IsFinal(s)) out.SetFinalWeight(ns, fst.FinalWeight(s));
  }
  if (const auto init = fst.InitialState()) {
    const StateId ni = remap[static_cast<std::size_t>(*init)];
    if (ni >= 0) out.SetInitialState(ni);
  }
  return out;
}

// Kahn ordering over the arcs accepted by `use_arc`; nullopt when those arcs
// form a cycle.
template <Semiring S, class ArcFilter>
std::optional<std::vector<StateId>> TopologicalOrder(const Fst<S>& fst,
                                                     ArcFilter use_arc) {
  const auto n = static_cast<std::size_t>(fst.NumStates());
  std::vector<std::size_t> indegree(n, 0);
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      if (use_arc(arc)) ++indegree[static_cast<std::size_t>(arc.target)];
    }
  }
  std::vector<StateId> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(static_cast<StateId>(i));
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& arc : fst.Arcs(order[head])) {
      if (!use_arc(arc)) continue;
      if (--indegree[static_cast<std::size_t>(arc.target)] == 0) {
        order.push_back(arc.target);
      }
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

template <Semiring S>
bool IsAcyclic(const Fst<S>& fst) {
  return TopologicalOrder(fst, [](const auto&) { return true; }).has_value();
}

// True when no state has two outgoing arcs with the same input label and
// no arc reads epsilon.
template <Semiring S>
bool IsDeterministic(const Fst<S>& fst) {
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    std::vector<std::uint64_t> labels;
    for (const auto& arc : fst.Arcs(s)) {
      if (arc.input.is_epsilon()) return false;
      labels.push_back(arc.input.value());
    }
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end()) {
      return false;
    }
  }
  return true;
}

}  // namespace wfst

#endif  // WFST_GRAPH_H_
