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
// Scalar reverse-mode automatic differentiation and the differentiable real
// semiring built on it. Every plus/times/divide on DiffWeight values records
// a node on a shared Tape; Backward() then accumulates adjoints in reverse
// node order.
//
// A tape is confined to one thread. Distinct tapes may be used in parallel.

#ifndef WFST_AUTODIFF_H_
#define WFST_AUTODIFF_H_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "wfst/semiring.h"

namespace wfst {

using NodeId = std::int64_t;
inline constexpr NodeId kConstantNode = -1;

struct TapeNode {
  double value = 0.0;
  std::array<NodeId, 2> parents{kConstantNode, kConstantNode};
  std::array<double, 2> partials{0.0, 0.0};
};

class Tape {
 public:
  Tape();
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Unique across all tapes in the process.
  std::uint64_t id() const { return id_; }
  std::size_t size() const { return nodes_.size(); }
  const TapeNode& node(NodeId id) const;

  NodeId AddLeaf(double value, bool trainable);
  // Parents must already be on the tape (or be kConstantNode).
  NodeId Record(double value, NodeId p0, double d0,
                NodeId p1 = kConstantNode, double d1 = 0.0);

  bool IsParameter(NodeId id) const;
  const std::vector<NodeId>& parameters() const { return parameters_; }

  void SetName(NodeId id, std::string name);
  std::optional<std::string_view> Name(NodeId id) const;
  std::optional<NodeId> FindByName(std::string_view name) const;

 private:
  std::uint64_t id_;
  std::vector<TapeNode> nodes_;
  std::vector<bool> trainable_;
  std::vector<NodeId> parameters_;
  std::unordered_map<NodeId, std::string> names_;
  std::unordered_map<std::string, NodeId> by_name_;
};

// A real value plus its position on a tape; kConstantNode marks values with
// no recorded history (the identities, quantized keys).
struct DiffWeight {
  double value = 0.0;
  NodeId node = kConstantNode;
  std::uint64_t tape = 0;

  static DiffWeight Constant(double v) { return DiffWeight{v}; }
  bool is_constant() const { return node == kConstantNode; }
};

// A trainable leaf.
DiffWeight Parameter(Tape& tape, double initial_value, std::string name = {});

using Gradients = std::map<NodeId, double>;

// d(output)/d(p) for every trainable parameter p of `tape`; parameters that
// do not reach the output get exactly 0.
Gradients Backward(const Tape& tape, const DiffWeight& output);

// Recorded elementwise operations used to build losses.
DiffWeight Log(Tape& tape, const DiffWeight& x);
// ca * a + cb * b.
DiffWeight Linear(Tape& tape, const DiffWeight& a, double ca,
                  const DiffWeight& b, double cb);

// ⟨+, ×, 0, 1⟩ over reals, recording every operation on the tape.
class DiffSemiring {
 public:
  using Weight = DiffWeight;

  DiffSemiring();  // fresh tape
  explicit DiffSemiring(std::shared_ptr<Tape> tape);

  Tape& tape() const { return *tape_; }
  const std::shared_ptr<Tape>& shared_tape() const { return tape_; }

  SemiringDescriptor descriptor() const {
    return {.name = "diff", .has_division = true, .has_power = true};
  }

  Weight Zero() const { return Weight::Constant(0.0); }
  Weight One() const { return Weight::Constant(1.0); }
  Weight Plus(const Weight& a, const Weight& b) const;
  Weight Times(const Weight& a, const Weight& b) const;
  Weight Divide(const Weight& a, const Weight& b) const;
  bool Equal(const Weight& a, const Weight& b) const {
    return a.value == b.value;
  }
  std::size_t Hash(const Weight& a) const;
  bool ApproxEqual(const Weight& a, const Weight& b,
                   double delta = kDelta) const;
  Weight Quantize(const Weight& a, double delta = kDelta) const;
  bool Member(const Weight& a) const;
  Weight Reverse(const Weight& a) const { return a; }
  double SamplingWeight(const Weight& a) const { return a.value; }
  // "value", or "name=value" for named parameters.
  std::string ToString(const Weight& a) const;
  // Every parsed weight becomes a trainable parameter; a repeated name
  // refers to the same parameter.
  Weight Parse(std::string_view text) const;
  Weight Random(std::mt19937_64& rng) const;

  friend bool operator==(const DiffSemiring& a, const DiffSemiring& b) {
    return a.tape_ == b.tape_;
  }

 private:
  void Check(const Weight& w) const;

  std::shared_ptr<Tape> tape_;
};

static_assert(RandomSemiring<DiffSemiring>);

}  // namespace wfst

#endif  // WFST_AUTODIFF_H_
