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

#include "wfst/training.h"

#include <unordered_map>

#include "wfst/compose.h"

namespace wfst {
namespace {

DiffWeight Loss(const DiffSemiring& sr, const DiffWeight& numerator,
                const DiffWeight& denominator) {
  if (!(numerator.value > 0.0) || !(denominator.value > 0.0)) {
    throw DomainError("loglikelihood: numerator " +
                      std::to_string(numerator.value) + " and denominator " +
                      std::to_string(denominator.value) +
                      " must both be positive");
  }
  Tape& tape = sr.tape();
  return Linear(tape, Log(tape, numerator), -1.0, Log(tape, denominator), 1.0);
}

}  // namespace

DiffWeight LogLikelihoodLoss(const Fst<DiffSemiring>& full,
                             const Fst<BooleanSemiring>& observed,
                             const ShortestDistanceOptions& options) {
  const DiffWeight num = SumPaths(Compose(observed, full), options);
  const DiffWeight den = SumPaths(full, options);
  return Loss(full.semiring(), num, den);
}

DiffWeight PairLoss(const Fst<DiffSemiring>& full,
                    const std::vector<Label>& input,
                    const std::vector<Label>& output,
                    const ShortestDistanceOptions& options) {
  const auto x = FromSequence<BooleanSemiring>(std::span<const Label>(input));
  const auto y = FromSequence<BooleanSemiring>(std::span<const Label>(output));
  const DiffWeight num = SumPaths(Compose(Compose(x, full), y), options);
  const DiffWeight den = SumPaths(full, options);
  return Loss(full.semiring(), num, den);
}

Fst<DiffSemiring> RemapParameters(const Fst<DiffSemiring>& fst,
                                  std::shared_ptr<Tape> tape,
                                  const Gradients& update) {
  const Tape& old = fst.semiring().tape();
  DiffSemiring target(std::move(tape));
  std::unordered_map<NodeId, DiffWeight> fresh;
  auto map = [&](const DiffWeight& w) -> DiffWeight {
    if (w.is_constant() || !old.IsParameter(w.node)) {
      return DiffWeight::Constant(w.value);
    }
    auto it = fresh.find(w.node);
    if (it == fresh.end()) {
      const auto u = update.find(w.node);
      const double v = u == update.end() ? w.value : u->second;
      const auto name = old.Name(w.node);
      it = fresh.emplace(w.node, Parameter(target.tape(), v,
                                           name ? std::string(*name) : ""))
               .first;
    }
    return it->second;
  };

  Fst<DiffSemiring> out(target);
  for (StateId s = 0; s < fst.NumStates(); ++s) out.AddState();
  for (StateId s = 0; s < fst.NumStates(); ++s) {
    for (const auto& arc : fst.Arcs(s)) {
      out.AddArc(s, arc.target, arc.input, arc.output, map(arc.weight));
    }
  }
  for (const auto& [s, w] : fst.FinalWeights()) out.SetFinalWeight(s, map(w));
  if (const auto init = fst.InitialState()) out.SetInitialState(*init);
  return out;
}

TrainResult Train(const Fst<DiffSemiring>& model,
                  const std::vector<TrainingPair>& pairs,
                  const TrainOptions& options) {
  TrainResult result{RemapParameters(model, std::make_shared<Tape>()), {}};
  for (std::size_t step = 0; step < options.steps; ++step) {
    const Fst<DiffSemiring>& current = result.model;
    const DiffSemiring& sr = current.semiring();
    DiffWeight total = sr.Zero();
    for (const auto& [input, output] : pairs) {
      total = sr.Plus(total, PairLoss(current, input, output, options.distance));
    }
    result.losses.push_back(total.value);
    const Gradients grads = Backward(sr.tape(), total);
    Gradients next;
    for (const auto& [node, g] : grads) {
      next[node] = sr.tape().node(node).value - options.rate * g;
    }
    result.model = RemapParameters(current, std::make_shared<Tape>(), next);
  }
  return result;
}

}  // namespace wfst
