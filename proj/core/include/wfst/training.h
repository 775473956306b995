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
// Conditional log-likelihood training over the differentiable semiring.

#ifndef WFST_TRAINING_H_
#define WFST_TRAINING_H_

#include <string>
#include <utility>
#include <vector>

#include "wfst/autodiff.h"
#include "wfst/fst.h"
#include "wfst/shortest_distance.h"

namespace wfst {

// -(log numerator - log denominator) with numerator the total weight of
// Compose(observed, full) and denominator the total weight of `full`.
DiffWeight LogLikelihoodLoss(const Fst<DiffSemiring>& full,
                             const Fst<BooleanSemiring>& observed,
                             const ShortestDistanceOptions& options = {});

// Same loss for an input/output pair: the numerator keeps only the paths
// of `full` that read `input` and write `output`.
DiffWeight PairLoss(const Fst<DiffSemiring>& full,
                    const std::vector<Label>& input,
                    const std::vector<Label>& output,
                    const ShortestDistanceOptions& options = {});

// Copies `fst` onto `tape`. Each trainable parameter of the source becomes
// one trainable parameter (shared by every arc that used it, name kept);
// other weights become constants. `update` maps old parameter node ids to
// new values; missing entries keep their value.
Fst<DiffSemiring> RemapParameters(const Fst<DiffSemiring>& fst,
                                  std::shared_ptr<Tape> tape,
                                  const Gradients& update = {});

struct TrainOptions {
  std::size_t steps = 100;
  double rate = 0.05;
  ShortestDistanceOptions distance;
};

struct TrainResult {
  Fst<DiffSemiring> model;
  // Loss summed over the pairs, recorded before each update.
  std::vector<double> losses;
};

using TrainingPair = std::pair<std::vector<Label>, std::vector<Label>>;

// Plain gradient descent on the summed pair loss. Each step uses a fresh
// tape.
TrainResult Train(const Fst<DiffSemiring>& model,
                  const std::vector<TrainingPair>& pairs,
                  const TrainOptions& options = {});

}  // namespace wfst

#endif  // WFST_TRAINING_H_
