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

#ifndef WFST_RANDOM_PATH_H_
#define WFST_RANDOM_PATH_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "wfst/path.h"

namespace wfst {

struct RandomPathOptions {
  std::uint64_t seed = 0;
  std::size_t max_steps = 10000;
};

namespace detail {

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
inline double UnitInterval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace detail

// Walks from the initial state. At each state, stopping (weighted by the
// final weight's sampling weight) competes with every outgoing arc
// (weighted by the arc's sampling weight).
template <Semiring S>
Path<WeightOf<S>> RandomPath(const Fst<S>& fst,
                             const RandomPathOptions& options = {}) {
  using W = WeightOf<S>;
  const S& sr = fst.semiring();
  const auto init = fst.InitialState();
  if (!init) throw NoAcceptingPathError("random_path: no initial state");
  std::mt19937_64 rng(options.seed);

  auto checked = [](double w, StateId s) {
    if (!(w >= 0.0) || std::isinf(w)) {
      throw InvalidSamplingWeightError(
          "random_path: invalid sampling weight at state " + std::to_string(s));
    }
    return w;
  };

  std::vector<Arc<W>> arcs;
  std::vector<double> choice;
  StateId q = *init;
  for (std::size_t step = 0;; ++step) {
    const auto out = fst.Arcs(q);
    choice.clear();
    const double stop =
        fst.IsFinal(q) ? checked(sr.SamplingWeight(fst.FinalWeight(q)), q) : 0.0;
    double total = stop;
    for (const auto& arc : out) {
      choice.push_back(checked(sr.SamplingWeight(arc.weight), q));
      total += choice.back();
    }
    if (!(total > 0.0)) {
      throw SamplingDeadEndError("random_path: every choice at state " +
                                 std::to_string(q) + " has zero weight");
    }
    double u = detail::UnitInterval(rng) * total;
    if (u < stop) return MakePath(fst, std::move(arcs));
    u -= stop;
    std::size_t pick = 0;
    while (pick + 1 < choice.size() && (choice[pick] == 0.0 || u >= choice[pick])) {
      u -= choice[pick];
      ++pick;
    }
    if (choice[pick] == 0.0) {
      // Rounding ran past the last positive choice; take the last one.
      while (choice[pick] == 0.0) --pick;
    }
    if (step >= options.max_steps) {
      throw CycleLimitError("random_path: exceeded " +
                            std::to_string(options.max_steps) + " steps");
    }
    arcs.push_back(out[pick]);
    q = out[pick].target;
  }
}

}  // namespace wfst

#endif  // WFST_RANDOM_PATH_H_
