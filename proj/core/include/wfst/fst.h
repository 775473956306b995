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
// The mutable FST data model. States are dense ids [0, N); each state owns
// an ordered arc list; at most one initial state; final weights are stored
// sparsely and an absent entry means the state is not final.

#ifndef WFST_FST_H_
#define WFST_FST_H_

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "wfst/errors.h"
#include "wfst/label.h"
#include "wfst/semiring.h"
#include "wfst/semirings.h"

namespace wfst {

template <class W>
struct Arc {
  StateId source = 0;
  StateId target = 0;
  Label input;
  Label output;
  W weight;
};

template <Semiring S>
class Fst {
 public:
  using SemiringType = S;
  using Weight = typename S::Weight;
  using ArcType = Arc<Weight>;

  explicit Fst(S semiring = S()) : semiring_(std::move(semiring)) {}

  const S& semiring() const { return semiring_; }
  SemiringDescriptor descriptor() const { return semiring_.descriptor(); }

  StateId NumStates() const { return static_cast<StateId>(arcs_.size()); }

  std::size_t NumArcs() const {
    std::size_t total = 0;
    for (const auto& list : arcs_) total += list.size();
    return total;
  }
  std::size_t NumArcs(StateId s) const { return arcs_[Index(s)].size(); }

  StateId AddState() {
    arcs_.emplace_back();
    return NumStates() - 1;
  }

  bool HasState(StateId s) const { return s >= 0 && s < NumStates(); }

  void AddArc(StateId from, StateId to, Label input, Label output) {
    AddArc(from, to, input, output, semiring_.One());
  }

  void AddArc(StateId from, StateId to, Label input, Label output,
              Weight weight) {
    CheckState(from, "add_arc");
    CheckState(to, "add_arc");
    CheckMember(weight, "add_arc");
    arcs_[Index(from)].push_back(
        ArcType{from, to, input, output, std::move(weight)});
  }

  // Boolean weights are cast into this FST's semiring.
  void AddArc(StateId from, StateId to, Label input, Label output,
              BooleanWeight weight)
    requires(!std::is_same_v<Weight, BooleanWeight>)
  {
    AddArc(from, to, input, output,
           weight.value ? semiring_.One() : semiring_.Zero());
  }

  void SetInitialState(StateId s) {
    CheckState(s, "set_initial_state");
    initial_ = s;
  }
  void ClearInitialState() { initial_.reset(); }
  std::optional<StateId> InitialState() const { return initial_; }

  // Setting a final weight of zero makes the state non-final.
  void SetFinalWeight(StateId s, Weight weight) {
    CheckState(s, "set_final_weight");
    CheckMember(weight, "set_final_weight");
    if (IsZero(semiring_, weight)) {
      finals_.erase(s);
    } else {
      finals_.insert_or_assign(s, std::move(weight));
    }
  }

  void SetFinalWeight(StateId s, BooleanWeight weight)
    requires(!std::is_same_v<Weight, BooleanWeight>)
  {
    SetFinalWeight(s, weight.value ? semiring_.One() : semiring_.Zero());
  }

  Weight FinalWeight(StateId s) const {
    const auto it = finals_.find(s);
    return it == finals_.end() ? semiring_.Zero() : it->second;
  }
  bool IsFinal(StateId s) const { return finals_.contains(s); }
  const std::map<StateId, Weight>& FinalWeights() const { return finals_; }

  std::span<const ArcType> Arcs(StateId s) const { return arcs_[Index(s)]; }

  // Replaces every weight of state `s`'s arcs in place; used by algorithms
  // that rebuild weights without changing topology.
  std::span<ArcType> MutableArcs(StateId s) { return arcs_[Index(s)]; }

  bool IsAcceptor() const {
    for (const auto& list : arcs_) {
      for (const auto& arc : list) {
        if (arc.input != arc.output) return false;
      }
    }
    return true;
  }

  // Throws InvariantError when an internal invariant is broken.
  void Validate() const {
    if (initial_ && !HasState(*initial_)) {
      throw InvariantError("initial state out of range");
    }
    for (StateId s = 0; s < NumStates(); ++s) {
      for (const auto& arc : arcs_[Index(s)]) {
        if (arc.source != s || !HasState(arc.target)) {
          throw InvariantError("arc endpoints out of range at state " +
                               std::to_string(s));
        }
        if (!semiring_.Member(arc.weight)) {
          throw InvariantError("non-member arc weight at state " +
                               std::to_string(s));
        }
      }
    }
    for (const auto& [s, w] : finals_) {
      if (!HasState(s)) throw InvariantError("final state out of range");
      if (!semiring_.Member(w) || IsZero(semiring_, w)) {
        throw InvariantError("bad final weight at state " + std::to_string(s));
      }
    }
  }

 private:
  static std::size_t Index(StateId s) { return static_cast<std::size_t>(s); }

  void CheckState(StateId s, std::string_view op) const {
    if (!HasState(s)) {
      throw InvalidStateError(std::string(op) + ": state " +
                              std::to_string(s) + " does not exist (have " +
                              std::to_string(NumStates()) + " states)");
    }
  }

  void CheckMember(const Weight& w, std::string_view op) const {
    if (!semiring_.Member(w)) {
      throw InvalidWeightError(std::string(op) + ": weight " +
                               semiring_.ToString(w) + " is not a member of " +
                               std::string(semiring_.descriptor().name));
    }
  }

  S semiring_;
  std::vector<std::vector<ArcType>> arcs_;
  std::optional<StateId> initial_;
  std::map<StateId, Weight> finals_;
};

// A linear acceptor for `labels`: state 0 initial, state N final with one.
template <Semiring S = BooleanSemiring>
Fst<S> FromSequence(std::span<const Label> labels, S semiring = S()) {
  Fst<S> fst(std::move(semiring));
  StateId prev = fst.AddState();
  fst.SetInitialState(prev);
  for (const Label label : labels) {
    if (label.is_epsilon()) {
      throw InvalidLabelError("epsilon (0) is reserved and cannot appear in a "
                              "sequence");
    }
    const StateId next = fst.AddState();
    fst.AddArc(prev, next, label, label);
    prev = next;
  }
  fst.SetFinalWeight(prev, fst.semiring().One());
  return fst;
}

template <Semiring S = BooleanSemiring>
Fst<S> FromSequence(std::string_view utf8, S semiring = S()) {
  const std::vector<Label> labels = LabelsFromUtf8(utf8);
  return FromSequence<S>(std::span<const Label>(labels), std::move(semiring));
}

// A linear transducer mapping `input` to `output`; the shorter side is
// padded with epsilons at the end.
template <Semiring S = BooleanSemiring>
Fst<S> FromPair(std::span<const Label> input, std::span<const Label> output,
                S semiring = S()) {
  Fst<S> fst(std::move(semiring));
  StateId prev = fst.AddState();
  fst.SetInitialState(prev);
  const std::size_t n = std::max(input.size(), output.size());
  for (std::size_t i = 0; i < n; ++i) {
    const Label in = i < input.size() ? input[i] : kEpsilon;
    const Label out = i < output.size() ? output[i] : kEpsilon;
    if ((i < input.size() && in.is_epsilon()) ||
        (i < output.size() && out.is_epsilon())) {
      throw InvalidLabelError("epsilon (0) cannot appear in a sequence");
    }
    const StateId next = fst.AddState();
    fst.AddArc(prev, next, in, out);
    prev = next;
  }
  fst.SetFinalWeight(prev, fst.semiring().One());
  return fst;
}

}  // namespace wfst

#endif  // WFST_FST_H_
