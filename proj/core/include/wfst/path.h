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
// Accepting paths and brute-force enumeration. Enumeration is the reference
// semantics for every weighted-language claim: a path's weight is the
// ⊗-product of its arc weights times the final weight of its last state,
// and a string pair's weight is the ⊕-sum over its paths.

#ifndef WFST_PATH_H_
#define WFST_PATH_H_

#include <map>
#include <utility>
#include <vector>

#include "wfst/fst.h"
#include "wfst/graph.h"

namespace wfst {

template <class W>
struct Path {
  std::vector<Arc<W>> arcs;
  std::vector<Label> input;   // epsilon-free
  std::vector<Label> output;  // epsilon-free
  W weight;
};

template <class W>
struct PathList {
  std::vector<Path<W>> paths;
  // Set when max_paths or max_length cut the enumeration short.
  bool truncated = false;
};

struct EnumerateOptions {
  std::size_t max_paths = 10000;
  // Longest path, in arcs, that is explored; bounds cyclic machines. Longer
  // extensions are pruned and mark the result truncated.
  std::size_t max_length = 256;
};

template <Semiring S>
WeightOf<S> PathWeight(const Fst<S>& fst, const std::vector<Arc<WeightOf<S>>>& arcs) {
  const S& sr = fst.semiring();
  WeightOf<S> w = sr.One();
  for (const auto& arc : arcs) w = sr.Times(w, arc.weight);
  const StateId last = arcs.empty() ? fst.InitialState().value_or(0)
                                    : arcs.back().target;
  return sr.Times(w, fst.FinalWeight(last));
}

template <Semiring S>
Path<WeightOf<S>> MakePath(const Fst<S>& fst,
                           std::vector<Arc<WeightOf<S>>> arcs) {
  Path<WeightOf<S>> path{std::move(arcs), {}, {}, fst.semiring().One()};
  path.weight = PathWeight(fst, path.arcs);
  for (const auto& arc : path.arcs) {
    if (!arc.input.is_epsilon()) path.input.push_back(arc.input);
    if (!arc.output.is_epsilon()) path.output.push_back(arc.output);
  }
  return path;
}

// Depth-first in arc insertion order; a path is reported when its last
// state is reached, before its extensions.
template <Semiring S>
PathList<WeightOf<S>> EnumeratePaths(const Fst<S>& fst,
                                     const EnumerateOptions& options = {}) {
  using W = WeightOf<S>;
  PathList<W> result;
  const auto init = fst.InitialState();
  if (!init) return result;
  const auto live = Coaccessible(fst);
  if (!live[static_cast<std::size_t>(*init)]) return result;

  struct Frame {
    StateId state;
    std::size_t next_arc;
  };
  std::vector<Frame> stack{{*init, 0}};
  std::vector<Arc<W>> arcs;

  auto emit = [&](StateId s) {
    if (!fst.IsFinal(s)) return true;
    if (result.paths.size() >= options.max_paths) {
      result.truncated = true;
      return false;
    }
    result.paths.push_back(MakePath(fst, arcs));
    return true;
  };

  if (!emit(*init)) return result;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto out = fst.Arcs(top.state);
    while (top.next_arc < out.size() &&
           !live[static_cast<std::size_t>(out[top.next_arc].target)]) {
      ++top.next_arc;
    }
    if (top.next_arc == out.size()) {
      stack.pop_back();
      if (!arcs.empty()) arcs.pop_back();
      continue;
    }
    const Arc<W>& arc = out[top.next_arc++];
    if (arcs.size() >= options.max_length) {
      // Prune this extension only; shorter paths elsewhere still count.
      result.truncated = true;
      continue;
    }
    arcs.push_back(arc);
    stack.push_back({arc.target, 0});
    if (!emit(arc.target)) return result;
  }
  return result;
}

template <Semiring S>
PathList<WeightOf<S>> EnumeratePaths(const Fst<S>& fst,
                                     std::size_t max_paths) {
  EnumerateOptions options;
  options.max_paths = max_paths;
  return EnumeratePaths(fst, options);
}

using StringPair = std::pair<std::vector<Label>, std::vector<Label>>;

template <class W>
struct WeightedLanguage {
  std::map<StringPair, W> weights;
  bool truncated = false;
};

// Groups enumerated paths by (input, output) and ⊕-combines their weights.
// Pairs whose total is approximately zero are dropped.
template <Semiring S>
WeightedLanguage<WeightOf<S>> LanguageOf(const Fst<S>& fst,
                                         const EnumerateOptions& options = {},
                                         double delta = kDelta) {
  const S& sr = fst.semiring();
  WeightedLanguage<WeightOf<S>> lang;
  auto paths = EnumeratePaths(fst, options);
  lang.truncated = paths.truncated;
  for (auto& path : paths.paths) {
    StringPair key{std::move(path.input), std::move(path.output)};
    auto it = lang.weights.find(key);
    if (it == lang.weights.end()) {
      lang.weights.emplace(std::move(key), path.weight);
    } else {
      it->second = sr.Plus(it->second, path.weight);
    }
  }
  std::erase_if(lang.weights, [&](const auto& kv) {
    return sr.ApproxEqual(kv.second, sr.Zero(), delta);
  });
  return lang;
}

template <Semiring S>
bool SameLanguage(const S& sr, const WeightedLanguage<WeightOf<S>>& a,
                  const WeightedLanguage<WeightOf<S>>& b,
                  double delta = kDelta) {
  if (a.truncated || b.truncated) return false;
  if (a.weights.size() != b.weights.size()) return false;
  for (const auto& [key, w] : a.weights) {
    const auto it = b.weights.find(key);
    if (it == b.weights.end() || !sr.ApproxEqual(w, it->second, delta)) {
      return false;
    }
  }
  return true;
}

// False if either enumeration was truncated, since the comparison would be
// meaningless.
template <Semiring S>
bool EquivalentByEnumeration(const Fst<S>& a, const Fst<S>& b,
                             std::size_t max_paths = 10000,
                             double delta = kDelta) {
  EnumerateOptions options;
  options.max_paths = max_paths;
  return SameLanguage(a.semiring(), LanguageOf(a, options, delta),
                      LanguageOf(b, options, delta), delta);
}

}  // namespace wfst

#endif  // WFST_PATH_H_
