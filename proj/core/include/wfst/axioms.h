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

#ifndef WFST_AXIOMS_H_
#define WFST_AXIOMS_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "wfst/semiring.h"

namespace wfst {

struct AxiomViolation {
  std::string axiom;
  std::string witness;  // rendered elements, e.g. "a=1 b=2 c=3"
  std::size_t count = 0;  // failing samples for this axiom
};

struct AxiomReport {
  std::size_t samples = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const { return violations.empty(); }
  bool Violated(std::string_view axiom) const {
    for (const auto& v : violations) {
      if (v.axiom == axiom) return true;
    }
    return false;
  }
};

// Checks the semiring laws on random members. Each violated law is
// reported once, with the first failing witness and a failure count.
template <RandomSemiring S>
AxiomReport CheckSemiringAxioms(const S& sr, std::size_t samples = 1000,
                                double delta = kDelta,
                                std::uint64_t seed = 0x5eed) {
  using W = WeightOf<S>;
  AxiomReport report;
  report.samples = samples;
  std::map<std::string, std::size_t> index;
  auto fail = [&](const char* axiom, std::string witness) {
    auto [it, fresh] = index.try_emplace(axiom, report.violations.size());
    if (fresh) report.violations.push_back({axiom, std::move(witness), 0});
    ++report.violations[it->second].count;
  };
  auto approx = [&](const W& x, const W& y) {
    return sr.ApproxEqual(x, y, delta);
  };

  std::mt19937_64 rng(seed);
  // Mix the identities into the sample stream so edge cases are exercised.
  auto draw = [&]() -> W {
    switch (rng() % 16) {
      case 0: return sr.Zero();
      case 1: return sr.One();
      default: return sr.Random(rng);
    }
  };

  const W zero = sr.Zero();
  const W one = sr.One();
  const auto desc = sr.descriptor();
  for (std::size_t i = 0; i < samples; ++i) {
    const W a = draw(), b = draw(), c = draw();
    auto abc = [&] {
      return "a=" + sr.ToString(a) + " b=" + sr.ToString(b) +
             " c=" + sr.ToString(c);
    };

    if (!approx(sr.Plus(sr.Plus(a, b), c), sr.Plus(a, sr.Plus(b, c)))) {
      fail("plus-associativity", abc());
    }
    if (!approx(sr.Plus(a, b), sr.Plus(b, a))) fail("plus-commutativity", abc());
    if (!approx(sr.Times(sr.Times(a, b), c), sr.Times(a, sr.Times(b, c)))) {
      fail("times-associativity", abc());
    }
    if (desc.commutative && !approx(sr.Times(a, b), sr.Times(b, a))) {
      fail("times-commutativity", abc());
    }
    if (!approx(sr.Times(a, sr.Plus(b, c)),
                sr.Plus(sr.Times(a, b), sr.Times(a, c)))) {
      fail("left-distributivity", abc());
    }
    if (!approx(sr.Times(sr.Plus(a, b), c),
                sr.Plus(sr.Times(a, c), sr.Times(b, c)))) {
      fail("right-distributivity", abc());
    }
    if (!approx(sr.Plus(a, zero), a) || !approx(sr.Plus(zero, a), a)) {
      fail("plus-identity", abc());
    }
    if (!approx(sr.Times(a, one), a) || !approx(sr.Times(one, a), a)) {
      fail("times-identity", abc());
    }
    if (!approx(sr.Times(a, zero), zero) || !approx(sr.Times(zero, a), zero)) {
      fail("annihilation", abc());
    }
    if (desc.path()) {
      if (!sr.Equal(sr.Plus(a, a), a)) fail("idempotence", abc());
      const W s = sr.Plus(a, b);
      if (!sr.Equal(s, a) && !sr.Equal(s, b)) fail("total-order", abc());
    }
    const W copy = a;
    if (sr.Equal(a, copy) && sr.Hash(a) != sr.Hash(copy)) {
      fail("hash-consistency", abc());
    }
    if (sr.Equal(a, b) && sr.Hash(a) != sr.Hash(b)) {
      fail("hash-consistency", abc());
    }
    const W q = sr.Quantize(a, delta);
    if (!sr.Equal(sr.Quantize(q, delta), q)) fail("quantize-idempotence", abc());
    if (!sr.Member(a)) fail("membership", abc());
  }
  return report;
}

}  // namespace wfst

#endif  // WFST_AXIOMS_H_
