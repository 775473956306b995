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

#include "wfst/draw.h"

#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <utility>

namespace wfst {
namespace {

std::string DotQuote(std::string_view text) {
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string XmlEscape(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string NodeLabel(StateId s, const DrawState& state) {
  std::string label = std::to_string(s);
  if (!state.final_weight.empty()) label += "/" + state.final_weight;
  return label;
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

struct Point {
  double x, y;
};

Point Toward(Point from, Point to, double distance) {
  const double dx = to.x - from.x, dy = to.y - from.y;
  const double len = std::hypot(dx, dy);
  if (len == 0) return from;
  return {from.x + dx / len * distance, from.y + dy / len * distance};
}

}  // namespace

std::string DisplayLabel(Label label) {
  if (label.is_epsilon()) return "ε";
  if (IsPrintableLabel(label)) {
    std::string out;
    AppendUtf8(label.value(), out);
    return out;
  }
  return std::to_string(label.value());
}

std::string EdgeLabel(Label input, Label output, std::string_view weight) {
  std::string label = DisplayLabel(input);
  if (output != input) label += ":" + DisplayLabel(output);
  if (!weight.empty()) {
    label += '/';
    label += weight;
  }
  return label;
}

std::string RenderDot(const DrawGraph& graph, const DotOptions& options) {
  std::string out = "digraph " + DotQuote(options.graph_name) + " {\n";
  if (options.left_to_right) out += "  rankdir=LR;\n";
  out += "  node [shape=circle, style=filled, fillcolor=white];\n";
  for (std::size_t i = 0; i < graph.states.size(); ++i) {
    const DrawState& st = graph.states[i];
    const auto s = static_cast<StateId>(i);
    out += "  " + std::to_string(s) + " [label=" + DotQuote(NodeLabel(s, st));
    if (st.final) out += ", shape=doublecircle";
    if (st.initial && st.final) {
      out += ", style=wedged, fillcolor=\"green:red\"";
    } else if (st.initial) {
      out += ", fillcolor=green";
    } else if (st.final) {
      out += ", fillcolor=red";
    }
    out += "];\n";
  }
  for (const DrawEdge& e : graph.edges) {
    out += "  " + std::to_string(e.source) + " -> " + std::to_string(e.target) +
           " [label=" + DotQuote(e.label) + "];\n";
  }
  out += "}\n";
  return out;
}

std::string RenderHtml(const DrawGraph& graph, std::string_view title) {
  constexpr double kRadius = 20, kSpacing = 110, kMargin = 70;
  const std::size_t n = graph.states.size();

  // Left-to-right breadth-first order from the initial state; unreachable
  // states follow in id order.
  std::vector<std::size_t> column(n, n);
  std::size_t next = 0;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (graph.states[i].initial) {
      column[i] = next++;
      queue.push_back(i);
    }
  }
  std::vector<std::vector<std::size_t>> succ(n);
  for (const DrawEdge& e : graph.edges) {
    succ[static_cast<std::size_t>(e.source)].push_back(
        static_cast<std::size_t>(e.target));
  }
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    for (const std::size_t t : succ[s]) {
      if (column[t] == n) {
        column[t] = next++;
        queue.push_back(t);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (column[i] == n) column[i] = next++;
  }

  // Curves need headroom above (forward arcs, loops) and below (back arcs).
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  int max_bend = 1;
  for (const DrawEdge& e : graph.edges) {
    const auto a = column[static_cast<std::size_t>(e.source)];
    const auto b = column[static_cast<std::size_t>(e.target)];
    max_bend = std::max(max_bend, ++seen[{std::min(a, b), std::max(a, b)}]);
  }
  seen.clear();
  const double lift = 60 + 25.0 * max_bend + 10.0 * static_cast<double>(n);
  const double cy = kMargin + lift;
  const double width = 2 * kMargin + kSpacing * static_cast<double>(n ? n - 1 : 0);
  const double height = cy + lift + kMargin;
  auto center = [&](std::size_t s) {
    return Point{kMargin + kSpacing * static_cast<double>(column[s]), cy};
  };

  std::string svg;
  svg += "<svg class=\"fst\" width=\"" + Num(width) + "\" height=\"" +
         Num(height) + "\" viewBox=\"0 0 " + Num(width) + " " + Num(height) +
         "\" font-family=\"sans-serif\" font-size=\"13\">\n";
  svg +=
      "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" "
      "refY=\"5\" markerWidth=\"7\" markerHeight=\"7\" orient=\"auto\">"
      "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker>"
      "<linearGradient id=\"initial-final\"><stop offset=\"50%\" "
      "stop-color=\"green\"/><stop offset=\"50%\" stop-color=\"red\"/>"
      "</linearGradient></defs>\n";

  for (const DrawEdge& e : graph.edges) {
    const auto s = static_cast<std::size_t>(e.source);
    const auto t = static_cast<std::size_t>(e.target);
    const int k = seen[{std::min(column[s], column[t]), std::max(column[s], column[t])}]++;
    const Point p = center(s), q = center(t);
    std::string d;
    Point label;
    if (s == t) {
      const double h = 55 + 18.0 * k;
      d = "M" + Num(p.x - 8) + "," + Num(p.y - kRadius + 2) + " C" +
          Num(p.x - 30) + "," + Num(p.y - h) + " " + Num(p.x + 30) + "," +
          Num(p.y - h) + " " + Num(p.x + 8) + "," + Num(p.y - kRadius + 2);
      label = {p.x, p.y - h + 8};
    } else {
      const double span = std::fabs(q.x - p.x) / kSpacing;
      const bool forward = q.x > p.x;
      double bend = (forward && span <= 1.0 && k == 0) ? 0.0
                                                       : 30 + 25.0 * k + 10 * span;
      if (!forward) bend = -bend;
      const Point c{(p.x + q.x) / 2, cy - bend};
      const Point a = Toward(p, c, kRadius), b = Toward(q, c, kRadius);
      d = "M" + Num(a.x) + "," + Num(a.y) + " Q" + Num(c.x) + "," + Num(c.y) +
          " " + Num(b.x) + "," + Num(b.y);
      label = {0.25 * a.x + 0.5 * c.x + 0.25 * b.x,
               0.25 * a.y + 0.5 * c.y + 0.25 * b.y - (bend >= 0 ? 5 : -14)};
    }
    svg += "<g class=\"arc\"><path d=\"" + d +
           "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>"
           "<text x=\"" + Num(label.x) + "\" y=\"" + Num(label.y) +
           "\" text-anchor=\"middle\">" + XmlEscape(e.label) + "</text></g>\n";
  }

  for (std::size_t i = 0; i < n; ++i) {
    const DrawState& st = graph.states[i];
    const Point p = center(i);
    const std::string fill = st.initial && st.final ? "url(#initial-final)"
                             : st.initial           ? "green"
                             : st.final             ? "red"
                                                    : "white";
    svg += "<g class=\"state\" data-state=\"" + std::to_string(i) + "\">";
    if (st.initial) {
      svg += "<line x1=\"" + Num(p.x - kRadius - 30) + "\" y1=\"" + Num(p.y) +
             "\" x2=\"" + Num(p.x - kRadius) + "\" y2=\"" + Num(p.y) +
             "\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>";
    }
    svg += "<circle cx=\"" + Num(p.x) + "\" cy=\"" + Num(p.y) + "\" r=\"" +
           Num(kRadius) + "\" fill=\"" + fill + "\" stroke=\"#333\"/>";
    if (st.final) {
      svg += "<circle cx=\"" + Num(p.x) + "\" cy=\"" + Num(p.y) + "\" r=\"" +
             Num(kRadius - 4) + "\" fill=\"none\" stroke=\"#333\"/>";
    }
    svg += "<text x=\"" + Num(p.x) + "\" y=\"" + Num(p.y + 4) +
           "\" text-anchor=\"middle\">" +
           XmlEscape(NodeLabel(static_cast<StateId>(i), st)) + "</text></g>\n";
  }
  svg += "</svg>\n";

  std::string html = "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
  html += "<title>" + XmlEscape(title) + "</title>\n</head>\n<body>\n";
  html += svg;
  html += "</body>\n</html>\n";
  return html;
}

}  // namespace wfst
