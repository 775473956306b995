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

#include "wfst/autodiff.h"

#include <atomic>
#include <cmath>

#include "wfst/semirings.h"

namespace wfst {
namespace {

std::uint64_t NextTapeId() {
  static std::atomic<std::uint64_t> next{1};
  return next.fetch_add(1);
}

void CheckOnTape(const Tape& tape, const DiffWeight& w, std::string_view op) {
  if (w.is_constant()) return;
  if (w.tape != tape.id() || w.node < 0 ||
      static_cast<std::size_t>(w.node) >= tape.size()) {
    throw InvalidNodeError(std::string(op) + ": weight is not on this tape");
  }
}

}  // namespace

Tape::Tape() : id_(NextTapeId()) {}

const TapeNode& Tape::node(NodeId id) const {
  if (id < 0 || static_cast<std::size_t>(id) >= nodes_.size()) {
    throw InvalidNodeError("node " + std::to_string(id) + " is not on tape");
  }
  return nodes_[static_cast<std::size_t>(id)];
}

NodeId Tape::AddLeaf(double value, bool trainable) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(TapeNode{value});
  trainable_.push_back(trainable);
  if (trainable) parameters_.push_back(id);
  return id;
}

NodeId Tape::Record(double value, NodeId p0, double d0, NodeId p1,
                    double d1) {
  const auto id = static_cast<NodeId>(nodes_.size());
  if (p0 >= id || p1 >= id) {
    throw InvalidNodeError("parents must precede the recorded node");
  }
  nodes_.push_back(TapeNode{value, {p0, p1}, {d0, d1}});
  trainable_.push_back(false);
  return id;
}

bool Tape::IsParameter(NodeId id) const {
  return id >= 0 && static_cast<std::size_t>(id) < trainable_.size() &&
         trainable_[static_cast<std::size_t>(id)];
}

void Tape::SetName(NodeId id, std::string name) {
  node(id);
  by_name_[name] = id;
  names_[id] = std::move(name);
}

std::optional<std::string_view> Tape::Name(NodeId id) const {
  const auto it = names_.find(id);
  if (it == names_.end()) return std::nullopt;
  return std::string_view(it->second);
}

std::optional<NodeId> Tape::FindByName(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

DiffWeight Parameter(Tape& tape, double initial_value, std::string name) {
  const NodeId id = tape.AddLeaf(initial_value, /*trainable=*/true);
  if (!name.empty()) tape.SetName(id, std::move(name));
  return DiffWeight{initial_value, id, tape.id()};
}

Gradients Backward(const Tape& tape, const DiffWeight& output) {
  Gradients grads;
  for (const NodeId p : tape.parameters()) grads[p] = 0.0;
  if (output.is_constant()) return grads;
  CheckOnTape(tape, output, "backward");

  std::vector<double> adjoint(static_cast<std::size_t>(output.node) + 1, 0.0);
  adjoint[static_cast<std::size_t>(output.node)] = 1.0;
  for (NodeId id = output.node; id >= 0; --id) {
    const double a = adjoint[static_cast<std::size_t>(id)];
    if (a == 0.0) continue;
    const TapeNode& n = tape.node(id);
    for (int k = 0; k < 2; ++k) {
      if (n.parents[k] != kConstantNode) {
        adjoint[static_cast<std::size_t>(n.parents[k])] += a * n.partials[k];
      }
    }
  }
  for (auto& [p, g] : grads) {
    if (p <= output.node) g = adjoint[static_cast<std::size_t>(p)];
  }
  return grads;
}

DiffWeight Log(Tape& tape, const DiffWeight& x) {
  CheckOnTape(tape, x, "log");
  if (!(x.value > 0.0)) {
    throw DomainError("log of non-positive value " +
                      detail::FormatDouble(x.value));
  }
  const double v = std::log(x.value);
  if (x.is_constant()) return DiffWeight::Constant(v);
  return DiffWeight{v, tape.Record(v, x.node, 1.0 / x.value), tape.id()};
}

DiffWeight Linear(Tape& tape, const DiffWeight& a, double ca,
                  const DiffWeight& b, double cb) {
  CheckOnTape(tape, a, "linear");
  CheckOnTape(tape, b, "linear");
  const double v = ca * a.value + cb * b.value;
  if (a.is_constant() && b.is_constant()) return DiffWeight::Constant(v);
  return DiffWeight{v, tape.Record(v, a.node, ca, b.node, cb), tape.id()};
}

DiffSemiring::DiffSemiring() : tape_(std::make_shared<Tape>()) {}

DiffSemiring::DiffSemiring(std::shared_ptr<Tape> tape)
    : tape_(tape ? std::move(tape) : std::make_shared<Tape>()) {}

void DiffSemiring::Check(const Weight& w) const {
  if (!w.is_constant() && w.tape != tape_->id()) {
    throw SemiringMismatchError("diff weight belongs to a different tape");
  }
}

DiffWeight DiffSemiring::Plus(const Weight& a, const Weight& b) const {
  Check(a);
  Check(b);
  const double v = a.value + b.value;
  if (a.is_constant() && b.is_constant()) return Weight::Constant(v);
  return Weight{v, tape_->Record(v, a.node, 1.0, b.node, 1.0), tape_->id()};
}

DiffWeight DiffSemiring::Times(const Weight& a, const Weight& b) const {
  Check(a);
  Check(b);
  const double v = a.value * b.value;
  if (a.is_constant() && b.is_constant()) return Weight::Constant(v);
  return Weight{v, tape_->Record(v, a.node, b.value, b.node, a.value),
                tape_->id()};
}

DiffWeight DiffSemiring::Divide(const Weight& a, const Weight& b) const {
  Check(a);
  Check(b);
  if (b.value == 0.0) throw DomainError("diff division by zero");
  const double v = a.value / b.value;
  if (a.is_constant() && b.is_constant()) return Weight::Constant(v);
  return Weight{v,
                tape_->Record(v, a.node, 1.0 / b.value, b.node,
                              -a.value / (b.value * b.value)),
                tape_->id()};
}

std::size_t DiffSemiring::Hash(const Weight& a) const {
  return detail::HashDouble(a.value);
}

bool DiffSemiring::ApproxEqual(const Weight& a, const Weight& b,
                               double delta) const {
  return detail::ApproxEqualDouble(a.value, b.value, delta);
}

DiffWeight DiffSemiring::Quantize(const Weight& a, double delta) const {
  return Weight::Constant(detail::QuantizeDouble(a.value, delta));
}

bool DiffSemiring::Member(const Weight& a) const {
  return std::isfinite(a.value) &&
         (a.is_constant() ||
          (a.tape == tape_->id() &&
           static_cast<std::size_t>(a.node) < tape_->size()));
}

std::string DiffSemiring::ToString(const Weight& a) const {
  std::string value = detail::FormatDouble(a.value);
  if (!a.is_constant() && a.tape == tape_->id()) {
    if (const auto name = tape_->Name(a.node)) {
      return std::string(*name) + "=" + value;
    }
  }
  return value;
}

DiffWeight DiffSemiring::Parse(std::string_view text) const {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    return Parameter(*tape_, detail::ParseDouble(text));
  }
  const std::string_view name = text.substr(0, eq);
  const double value = detail::ParseDouble(text.substr(eq + 1));
  if (name.empty()) throw InvalidWeightError("empty parameter name");
  if (const auto existing = tape_->FindByName(name)) {
    const double stored = tape_->node(*existing).value;
    if (stored != value) {
      throw InvalidWeightError("parameter '" + std::string(name) +
                               "' given conflicting values");
    }
    return Weight{stored, *existing, tape_->id()};
  }
  return Parameter(*tape_, value, std::string(name));
}

DiffWeight DiffSemiring::Random(std::mt19937_64& rng) const {
  const auto pick = rng() % 10;
  if (pick == 0) return Zero();
  if (pick == 1) return One();
  return Parameter(*tape_,
                   std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
}

}  // namespace wfst
