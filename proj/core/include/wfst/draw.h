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
// Diagram output. States are drawn with the initial state filled green and
// final states filled red. Arc labels read "in:out/weight"; the ":out" part
// is dropped when both labels agree and "/weight" is dropped for one.

#ifndef WFST_DRAW_H_
#define WFST_DRAW_H_

#include <string>
#include <string_view>
#include <vector>

#include "wfst/fst.h"

namespace wfst {

struct DrawState {
  bool initial = false;
  bool final = false;
  std::string final_weight;  // empty when non-final or one
};

struct DrawEdge {
  StateId source = 0;
  StateId target = 0;
  std::string label;
};

// Semiring-free view of an FST, shared by the DOT and HTML writers.
struct DrawGraph {
  std::vector<DrawState> states;
  std::vector<DrawEdge> edges;
};

struct DotOptions {
  std::string graph_name = "fst";
  bool left_to_right = true;
};

// A single label for display: "ε" for epsilon, the character for
// printable code points, the integer otherwise.
std::string DisplayLabel(Label label);

// `weight` empty means the weight is one and is omitted.
std::string EdgeLabel(Label input, Label output, std::string_view weight);

std::string RenderDot(const DrawGraph& graph, const DotOptions& options = {});
std::string RenderHtml(const DrawGraph& graph, std::string_view title = "fst");

template <Semiring S>
DrawGraph MakeDrawGraph(const Fst<S>& fst) {
  const S& sr = fst.semiring();
  DrawGraph graph;
  graph.states.resize(static_cast<std::size_t>(fst.NumStates()));
  if (const auto init = fst.InitialState()) {
    graph.states[static_cast<std::size_t>(*init)].initial = true;
  }
  for (const auto& [s, w] : fst.FinalWeights()) {
    auto& state = graph.states[static_cast<std::size_t>(s)];
    state.final = true;
    if (!IsOne(sr, w)) state.final_weight = sr.ToString(w);
  }
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      graph.edges.push_back(
          {arc.source, arc.target,
           EdgeLabel(arc.input, arc.output,
                     IsOne(sr, arc.weight) ? std::string()
                                           : sr.ToString(arc.weight))});
    }
  }
  return graph;
}

template <Semiring S>
std::string RenderDot(const Fst<S>& fst, const DotOptions& options = {}) {
  return RenderDot(MakeDrawGraph(fst), options);
}

template <Semiring S>
std::string RenderHtml(const Fst<S>& fst, std::string_view title = "fst") {
  return RenderHtml(MakeDrawGraph(fst), title);
}

}  // namespace wfst

#endif  // WFST_DRAW_H_
