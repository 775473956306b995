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

#include <cmath>
#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "wfst/algorithms.h"
#include "wfst/autodiff.h"

namespace wfst {
namespace {

// A random real-weighted acceptor over {a, b, c} with a left-to-right
// backbone, so every state is reachable and the machine is acyclic.
Fst<RealSemiring> Lattice(int states, int extra_arcs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::uniform_int_distribution<int> label('a', 'c');
  Fst<RealSemiring> fst;
  for (int i = 0; i < states; ++i) fst.AddState();
  fst.SetInitialState(0);
  for (int i = 0; i + 1 < states; ++i) {
    const int l = label(rng);
    fst.AddArc(i, i + 1, l, l, weight(rng));
  }
  std::uniform_int_distribution<int> state(0, states - 1);
  for (int k = 0; k < extra_arcs; ++k) {
    int s = state(rng), t = state(rng);
    if (s == t) continue;
    if (s > t) std::swap(s, t);
    const int l = label(rng);
    fst.AddArc(s, t, l, l, weight(rng));
  }
  fst.SetFinalWeight(states - 1, 1.0);
  return fst;
}

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = Lattice(n, 2 * n, 1);
  const auto b = Lattice(n, 2 * n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(16)->Arg(64)->Arg(256);

void BM_Determinize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = Lattice(n, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(Determinize(a));
}
BENCHMARK(BM_Determinize)->Arg(16)->Arg(64)->Arg(256);

void BM_ShortestDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = Lift(Lattice(n, 4 * n, 4), TropicalSemiring{},
                      [](double w) { return -std::log(w); });
  for (auto _ : state) benchmark::DoNotOptimize(ShortestDistance(a));
}
BENCHMARK(BM_ShortestDistance)->Arg(256)->Arg(4096);

void BM_SumPaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = Lattice(n, 4 * n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(SumPaths(a));
}
BENCHMARK(BM_SumPaths)->Arg(256)->Arg(4096);

void BM_SumPathsDiff(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto real = Lattice(n, 4 * n, 6);
  for (auto _ : state) {
    const DiffSemiring sr;
    const auto a = Lift(real, sr, [&](double w) { return Parameter(sr.tape(), w); });
    const DiffWeight total = SumPaths(a);
    benchmark::DoNotOptimize(Backward(sr.tape(), total));
  }
}
BENCHMARK(BM_SumPathsDiff)->Arg(256)->Arg(1024);

}  // namespace
}  // namespace wfst

BENCHMARK_MAIN();
