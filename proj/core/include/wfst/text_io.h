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
// Line-oriented text format:
//
//   #semiring real
//   #initial 0
//   0 1 104 119 1        arc: source target input output weight
//   5 3                  final: state weight
//   #states 7            optional; only when trailing states have no lines
//
// Labels are integers with 0 for epsilon. Arcs are written in state order,
// then insertion order; finals follow, sorted by state.

#ifndef WFST_TEXT_IO_H_
#define WFST_TEXT_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfst/errors.h"
#include "wfst/fst.h"

namespace wfst {

namespace detail {

struct TextRecord {
  std::size_t line = 0;
  std::vector<std::string_view> fields;
};

struct ScannedText {
  std::string_view semiring;
  std::optional<StateId> initial;
  std::optional<StateId> declared_states;
  std::vector<TextRecord> arcs;    // five fields (or four, weight omitted)
  std::vector<TextRecord> finals;  // two fields (or one, weight omitted)
};

// Splits the document and validates the header and field counts. The
// returned views point into `text`.
ScannedText ScanText(std::string_view text);

StateId ParseStateField(std::string_view field, std::size_t line);
Label ParseLabelField(std::string_view field, std::size_t line);

}  // namespace detail

// Name from the "#semiring" header line.
std::string_view PeekSemiringName(std::string_view text);

template <Semiring S>
std::string RenderText(const Fst<S>& fst) {
  const S& sr = fst.semiring();
  std::string out = "#semiring ";
  out += sr.descriptor().name;
  out += "\n#initial ";
  const auto init = fst.InitialState();
  out += init ? std::to_string(*init) : "-";
  out += '\n';
  StateId implied = init ? *init + 1 : 0;
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      out += std::to_string(arc.source) + ' ' + std::to_string(arc.target) + ' ' +
             std::to_string(arc.input.value()) + ' ' +
             std::to_string(arc.output.value()) + ' ' + sr.ToString(arc.weight) +
             '\n';
      implied = std::max({implied, arc.source + 1, arc.target + 1});
    }
  }
  for (const auto& [s, w] : fst.FinalWeights()) {
    out += std::to_string(s) + ' ' + sr.ToString(w) + '\n';
    implied = std::max(implied, s + 1);
  }
  if (fst.NumStates() > implied) {
    out += "#states " + std::to_string(fst.NumStates()) + '\n';
  }
  return out;
}

template <Semiring S>
Fst<S> ParseText(std::string_view text, S semiring = S()) {
  const detail::ScannedText doc = detail::ScanText(text);
  if (doc.semiring != semiring.descriptor().name) {
    throw ParseError(1, "expected semiring '" +
                            std::string(semiring.descriptor().name) +
                            "', found '" + std::string(doc.semiring) + "'");
  }
  Fst<S> fst(std::move(semiring));
  const S& sr = fst.semiring();

  auto ensure = [&](StateId s, std::size_t line) {
    if (doc.declared_states && s >= *doc.declared_states) {
      throw ParseError(line, "state " + std::to_string(s) +
                                 " is beyond the declared " +
                                 std::to_string(*doc.declared_states) +
                                 " states");
    }
    while (fst.NumStates() <= s) fst.AddState();
  };
  auto weight = [&](const detail::TextRecord& rec, std::size_t index) {
    if (rec.fields.size() <= index) return sr.One();
    try {
      return sr.Parse(rec.fields[index]);
    } catch (const ParseError&) {
      throw;
    } catch (const FstError& e) {
      throw ParseError(rec.line, e.what());
    }
  };
  auto rethrow = [](const detail::TextRecord& rec, auto&& fn) {
    try {
      fn();
    } catch (const ParseError&) {
      throw;
    } catch (const FstError& e) {
      throw ParseError(rec.line, e.what());
    }
  };

  if (doc.declared_states) ensure(*doc.declared_states - 1, 0);
  if (doc.initial) ensure(*doc.initial, 2);
  for (const auto& rec : doc.arcs) {
    const StateId src = detail::ParseStateField(rec.fields[0], rec.line);
    const StateId dst = detail::ParseStateField(rec.fields[1], rec.line);
    const Label in = detail::ParseLabelField(rec.fields[2], rec.line);
    const Label out = detail::ParseLabelField(rec.fields[3], rec.line);
    ensure(src, rec.line);
    ensure(dst, rec.line);
    auto w = weight(rec, 4);
    rethrow(rec, [&] { fst.AddArc(src, dst, in, out, std::move(w)); });
  }
  for (const auto& rec : doc.finals) {
    const StateId s = detail::ParseStateField(rec.fields[0], rec.line);
    ensure(s, rec.line);
    auto w = weight(rec, 1);
    rethrow(rec, [&] { fst.SetFinalWeight(s, std::move(w)); });
  }
  if (doc.initial) fst.SetInitialState(*doc.initial);
  return fst;
}

}  // namespace wfst

#endif  // WFST_TEXT_IO_H_
