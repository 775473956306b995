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

#include <gtest/gtest.h>

#include "support/figures.h"
#include "support/oracles.h"
#include "support/random_fst.h"
#include "wfst/algorithms.h"
#include "wfst/text_io.h"

namespace wfst {
namespace {

using testing::BruteLanguage;
using testing::Codes;
using testing::StringKey;

template <Semiring S>
bool SameOracleLanguage(const Fst<S>& a, const Fst<S>& b) {
  return testing::SameBruteLanguage(a.semiring(), BruteLanguage(a), BruteLanguage(b));
}

StringKey Acceptor(std::string_view s) { return {Codes(s), Codes(s)}; }

Fst<RealSemiring> WeightedWord(std::string_view s, double w) {
  auto fst = FromSequence<RealSemiring>(s);
  fst.MutableArcs(0)[0].weight = w;
  return fst;
}

// The real semiring with division hidden, for unsupported-operation paths.
struct NoDivisionSemiring : RealSemiring {
  SemiringDescriptor descriptor() const {
    SemiringDescriptor d = RealSemiring::descriptor();
    d.name = "nodiv";
    d.has_division = false;
    return d;
  }
};

TEST(UnionTest, AcceptsBothWords) {
  const auto u = Union(FromSequence("hello"), FromSequence("help"));
  const auto lang = BruteLanguage(u);
  ASSERT_EQ(lang.size(), 2u);
  EXPECT_TRUE(lang.contains(Acceptor("hello")));
  EXPECT_TRUE(lang.contains(Acceptor("help")));
  EXPECT_EQ(u.NumStates(), 11);
}

TEST(UnionTest, EmptyIsIdentity) {
  const auto x = testing::HelloWorldTroll();
  EXPECT_TRUE(SameOracleLanguage(Union(x, Fst<RealSemiring>()), x));
  EXPECT_TRUE(SameOracleLanguage(Union(Fst<RealSemiring>(), x), x));
}

TEST(UnionTest, SharedStringPlusCombines) {
  const auto lang = BruteLanguage(Union(WeightedWord("ab", 2), WeightedWord("ab", 3)));
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_EQ(lang.at(Acceptor("ab")), 5.0);
}

TEST(UnionTest, BooleanOperandIsCast) {
  const auto u = Union(FromSequence("a"), WeightedWord("b", 4));
  const auto lang = BruteLanguage(u);
  EXPECT_EQ(lang.at(Acceptor("a")), 1.0);
  EXPECT_EQ(lang.at(Acceptor("b")), 4.0);
}

TEST(ConcatTest, Basics) {
  const auto lang = BruteLanguage(Concat(FromSequence("he"), FromSequence("llo")));
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_TRUE(lang.contains(Acceptor("hello")));
  const auto x = testing::HelloWorldTroll();
  EXPECT_TRUE(SameOracleLanguage(Concat(x, FromSequence<RealSemiring>("")), x));
  EXPECT_EQ(BruteLanguage(Concat(WeightedWord("a", 2), WeightedWord("b", 3)))
                .at(Acceptor("ab")),
            6.0);
}

TEST(ClosureTest, Repetition) {
  const auto lang = BruteLanguage(Closure(FromSequence("ab")), 12);
  EXPECT_TRUE(lang.contains(Acceptor("")));
  EXPECT_TRUE(lang.contains(Acceptor("ab")));
  EXPECT_TRUE(lang.contains(Acceptor("abab")));
  EXPECT_FALSE(lang.contains(Acceptor("a")));
}

TEST(ClosureTest, EmptyLanguageGivesEpsilon) {
  const auto lang = BruteLanguage(Closure(Fst<BooleanSemiring>()));
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_TRUE(lang.contains(Acceptor("")));
}

TEST(ClosureTest, WeightsMultiply) {
  const auto lang = BruteLanguage(Closure(WeightedWord("a", 0.5)), 12);
  EXPECT_DOUBLE_EQ(lang.at(Acceptor("aaa")), 0.125);
  EXPECT_DOUBLE_EQ(lang.at(Acceptor("")), 1.0);
}

TEST(ComposeTest, OnlyHelloIsTransduced) {
  const auto words = Union(FromSequence("hello"), FromSequence("help"));
  const auto lang = BruteLanguage(Compose(words, testing::HelloWorld()));
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_TRUE(lang.contains(StringKey{Codes("hello"), Codes("world")}));
}

TEST(ComposeTest, AaaThroughDoubleAToB) {
  const auto composed = Compose(FromSequence("aaa"), testing::DoubleAToB());
  const auto paths = EnumeratePaths(composed).paths;
  ASSERT_EQ(paths.size(), 3u);
  const auto lang = BruteLanguage(composed);
  ASSERT_EQ(lang.size(), 3u);
  EXPECT_DOUBLE_EQ(lang.at({Codes("aaa"), Codes("aaa")}), 1.0);
  EXPECT_DOUBLE_EQ(lang.at({Codes("aaa"), Codes("ba")}), 0.5);
  EXPECT_DOUBLE_EQ(lang.at({Codes("aaa"), Codes("ab")}), 0.5);
}

TEST(ComposeTest, AutoCastMatchesExplicitCast) {
  const auto implicit = Compose(FromSequence("aaa"), testing::DoubleAToB());
  const auto explicit_cast = Compose(
      CastFromBoolean<RealSemiring>(FromSequence("aaa")), testing::DoubleAToB());
  EXPECT_TRUE(SameOracleLanguage(implicit, explicit_cast));
  EXPECT_EQ(implicit.NumStates(), explicit_cast.NumStates());
  EXPECT_EQ(implicit.NumArcs(), explicit_cast.NumArcs());
}

TEST(ComposeTest, EpsilonsDoNotDuplicatePaths) {
  // a:ε then ε:b on one side, ε-reading arcs on the other.
  Fst<RealSemiring> a;
  for (int i = 0; i < 3; ++i) a.AddState();
  a.SetInitialState(0);
  a.AddArc(0, 1, 'x', 0, 0.5);
  a.AddArc(1, 2, 0, 'y', 0.25);
  a.SetFinalWeight(2, 1.0);
  Fst<RealSemiring> b;
  for (int i = 0; i < 3; ++i) b.AddState();
  b.SetInitialState(0);
  b.AddArc(0, 1, 0, 'p', 2.0);
  b.AddArc(1, 2, 'y', 'q', 3.0);
  b.SetFinalWeight(2, 1.0);
  const auto c = Compose(a, b);
  const auto paths = testing::BrutePaths(c);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_DOUBLE_EQ(paths[0].weight, 0.75);
  EXPECT_EQ(paths[0].output, Codes("pq"));
}

// Composition weight law checked against a pairing of brute-force paths.
TEST(ComposeTest, PathWeightLawOnRandomMachines) {
  std::mt19937_64 rng(42);
  testing::RandomFstOptions opts;
  opts.max_states = 5;
  opts.max_arcs = 8;
  opts.alphabet = 2;
  const RealSemiring sr;
  int nonempty = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(), opts);
    const auto b = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(), opts);
    std::map<StringKey, double> expected;
    for (const auto& pa : testing::BrutePaths(a)) {
      for (const auto& pb : testing::BrutePaths(b)) {
        if (pa.output != pb.input) continue;
        expected[{pa.input, pb.output}] += pa.weight * pb.weight;
      }
    }
    const auto got = BruteLanguage(Compose(a, b));
    if (!got.empty()) ++nonempty;
    ASSERT_TRUE(testing::SameBruteLanguage(sr, expected, got)) << "trial " << trial;
  }
  EXPECT_GT(nonempty, 10);
}

TEST(ProjectTest, Sides) {
  const auto hw = testing::HelloWorld();
  const auto out = Project(hw, ProjectSide::kOutput);
  EXPECT_TRUE(out.IsAcceptor());
  EXPECT_TRUE(BruteLanguage(out).contains(Acceptor("world")));
  const auto in = Project(hw, ProjectSide::kInput);
  EXPECT_TRUE(BruteLanguage(in).contains(Acceptor("hello")));
  const auto fsa = FromSequence("abc");
  EXPECT_TRUE(SameOracleLanguage(Project(fsa, ProjectSide::kInput), fsa));
  EXPECT_TRUE(SameOracleLanguage(Project(fsa, ProjectSide::kOutput), fsa));
  EXPECT_EQ(RenderText(Project(out, ProjectSide::kInput)), RenderText(out));
  EXPECT_EQ(ParseProjectSide("input"), ProjectSide::kInput);
  EXPECT_THROW(ParseProjectSide("both"), InvalidArgumentError);
}

TEST(InvertTest, SwapsLabels) {
  const auto hw = testing::HelloWorld();
  const auto inv = Invert(hw);
  EXPECT_TRUE(BruteLanguage(inv).contains(StringKey{Codes("world"), Codes("hello")}));
  EXPECT_EQ(RenderText(Invert(inv)), RenderText(hw));
  const auto fsa = FromSequence("abc");
  EXPECT_EQ(RenderText(Invert(fsa)), RenderText(fsa));
}

TEST(RemoveEpsilonTest, UnionOfWords) {
  const auto u = Union(FromSequence("hello"), FromSequence("help"));
  const auto r = RemoveEpsilon(u);
  for (StateId s = 0; s < r.NumStates(); ++s) {
    for (const auto& arc : r.Arcs(s)) {
      EXPECT_FALSE(arc.input.is_epsilon() && arc.output.is_epsilon());
    }
  }
  EXPECT_TRUE(SameOracleLanguage(r, u));
}

TEST(RemoveEpsilonTest, ParallelRoutesAdd) {
  Fst<RealSemiring> fst;
  for (int i = 0; i < 4; ++i) fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 1, 0, 0, 0.2);
  fst.AddArc(0, 2, 0, 0, 0.3);
  fst.AddArc(1, 3, 'a', 'a');
  fst.AddArc(2, 3, 'a', 'a');
  fst.SetFinalWeight(3, 1.0);
  const auto r = RemoveEpsilon(fst);
  const auto lang = BruteLanguage(r);
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_DOUBLE_EQ(lang.at(Acceptor("a")), 0.5);
}

TEST(RemoveEpsilonTest, NoEpsilonsUnchanged) {
  const auto x = testing::HelloWorldTroll();
  EXPECT_TRUE(SameOracleLanguage(RemoveEpsilon(x), x));
}

TEST(RemoveEpsilonTest, DivergentCycleFails) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 0, 0, 0, 1.0);
  fst.AddArc(0, 1, 'a', 'a');
  fst.SetFinalWeight(1, 1.0);
  EXPECT_THROW(RemoveEpsilon(fst), ConvergenceError);
}

TEST(RemoveEpsilonTest, ConvergentCycleIsSummed) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 0, 0, 0, 0.5);
  fst.AddArc(0, 1, 'a', 'a');
  fst.SetFinalWeight(1, 1.0);
  const auto lang = BruteLanguage(RemoveEpsilon(fst));
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_NEAR(lang.at(Acceptor("a")), 2.0, 1.0 / 256);
}

TEST(DeterminizeTest, HelloHelp) {
  const auto d = Determinize(RemoveEpsilon(Union(FromSequence("hello"), FromSequence("help"))));
  EXPECT_EQ(d.NumStates(), 7);
  EXPECT_TRUE(IsDeterministic(d));
  EXPECT_TRUE(SameOracleLanguage(d, FromSequence("hello")) == false);
  const auto lang = BruteLanguage(d);
  EXPECT_EQ(lang.size(), 2u);
}

TEST(DeterminizeTest, SharedPrefix) {
  Fst<BooleanSemiring> fst;
  for (int i = 0; i < 5; ++i) fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 1, 'a', 'a');
  fst.AddArc(1, 2, 'b', 'b');
  fst.AddArc(0, 3, 'a', 'a');
  fst.AddArc(3, 4, 'c', 'c');
  fst.SetFinalWeight(2, BooleanWeight{true});
  fst.SetFinalWeight(4, BooleanWeight{true});
  const auto d = Determinize(fst);
  EXPECT_EQ(d.NumStates(), 4);
  EXPECT_EQ(d.NumArcs(0), 1u);
  EXPECT_TRUE(SameOracleLanguage(d, fst));
}

TEST(DeterminizeTest, AlreadyDeterministic) {
  const auto fsa = FromSequence<RealSemiring>("abc");
  EXPECT_TRUE(SameOracleLanguage(Determinize(fsa), fsa));
}

TEST(DeterminizeTest, Errors) {
  EXPECT_THROW(Determinize(testing::HelloWorld()), UnsupportedOperationError);
  EXPECT_THROW(Determinize(Union(FromSequence("a"), FromSequence("b"))), InvalidArgumentError);
  Fst<NoDivisionSemiring> nodiv;
  nodiv.AddState();
  nodiv.AddState();
  nodiv.SetInitialState(0);
  nodiv.AddArc(0, 1, 'a', 'a', 2.0);
  nodiv.SetFinalWeight(1, 1.0);
  EXPECT_THROW(Determinize(nodiv), UnsupportedOperationError);
}

TEST(DeterminizeTest, NonTwinsHitTheCap) {
  // a+b with cost 1 per a, a+c with cost 2 per a: no finite determinization.
  Fst<TropicalSemiring> fst;
  for (int i = 0; i < 4; ++i) fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 1, 'a', 'a', 1.0);
  fst.AddArc(1, 1, 'a', 'a', 1.0);
  fst.AddArc(1, 3, 'b', 'b', 0.0);
  fst.AddArc(0, 2, 'a', 'a', 2.0);
  fst.AddArc(2, 2, 'a', 'a', 2.0);
  fst.AddArc(2, 3, 'c', 'c', 0.0);
  fst.SetFinalWeight(3, 0.0);
  EXPECT_THROW(Determinize(fst), DeterminizationLimitError);
}

TEST(DeterminizeTest, RandomBooleanAcceptors) {
  std::mt19937_64 rng(7);
  testing::RandomFstOptions opts;
  opts.acceptor = true;
  const BooleanSemiring sr;
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = testing::RandomAcyclicFst(rng, sr, testing::TrueWeights(), opts);
    const auto d = Determinize(RemoveEpsilon(u));
    ASSERT_TRUE(IsDeterministic(d)) << "trial " << trial;
    ASSERT_TRUE(EquivalentByEnumeration(d, u)) << "trial " << trial;
    ASSERT_TRUE(SameOracleLanguage(d, u)) << "trial " << trial;
  }
}

TEST(ReverseTest, Words) {
  const auto r = Reverse(FromSequence("hello"));
  const auto lang = BruteLanguage(r);
  ASSERT_EQ(lang.size(), 1u);
  EXPECT_TRUE(lang.contains(Acceptor("olleh")));
  const auto w = BruteLanguage(Reverse(testing::HelloWorldTroll()));
  EXPECT_DOUBLE_EQ(w.at({Codes("olleh"), Codes("dlrow")}), 6.0);
  EXPECT_DOUBLE_EQ(w.at({Codes("olleh"), Codes("llort")}), 12.0);
}

TEST(PushTest, HelloWorldTrollKeepsPathWeights) {
  const auto x = testing::HelloWorldTroll();
  for (auto dir : {PushDirection::kInitial, PushDirection::kFinal}) {
    const auto p = Push(x, dir);
    const auto lang = BruteLanguage(p);
    EXPECT_DOUBLE_EQ(lang.at({Codes("hello"), Codes("world")}), 6.0);
    EXPECT_DOUBLE_EQ(lang.at({Codes("hello"), Codes("troll")}), 12.0);
  }
}

TEST(PushTest, SinglePathConcentratesOnFirstArc) {
  auto fst = FromSequence<RealSemiring>("abc");
  fst.MutableArcs(0)[0].weight = 2.0;
  fst.MutableArcs(1)[0].weight = 3.0;
  fst.MutableArcs(2)[0].weight = 0.5;
  fst.SetFinalWeight(3, 4.0);
  const auto p = Push(fst, PushDirection::kInitial);
  EXPECT_DOUBLE_EQ(p.Arcs(0)[0].weight, 12.0);
  EXPECT_DOUBLE_EQ(p.Arcs(1)[0].weight, 1.0);
  EXPECT_DOUBLE_EQ(p.Arcs(2)[0].weight, 1.0);
  EXPECT_DOUBLE_EQ(p.FinalWeight(3), 1.0);
  const auto f = Push(fst, PushDirection::kFinal);
  EXPECT_DOUBLE_EQ(f.FinalWeight(3), 12.0);
  EXPECT_DOUBLE_EQ(f.Arcs(0)[0].weight, 1.0);
}

TEST(PushTest, UnitWeightsAreANoOp) {
  const auto x = FromSequence<RealSemiring>("hello");
  EXPECT_EQ(RenderText(Push(x, PushDirection::kInitial)), RenderText(x));
  EXPECT_THROW(Push(Fst<NoDivisionSemiring>(), PushDirection::kInitial),
               UnsupportedOperationError);
  EXPECT_EQ(ParsePushDirection("final"), PushDirection::kFinal);
  EXPECT_THROW(ParsePushDirection("middle"), InvalidArgumentError);
}

TEST(LiftTest, BooleanToReal) {
  const auto fsa = FromSequence("abc");
  const auto r = CastFromBoolean<RealSemiring>(fsa);
  EXPECT_EQ(r.NumStates(), fsa.NumStates());
  EXPECT_EQ(r.NumArcs(), fsa.NumArcs());
  for (StateId s = 0; s < r.NumStates(); ++s) {
    for (const auto& arc : r.Arcs(s)) EXPECT_EQ(arc.weight, 1.0);
  }
  const auto twice = Lift(r, RealSemiring{}, [](double w) { return w; });
  EXPECT_EQ(RenderText(twice), RenderText(r));
}

TEST(LiftTest, NonMemberCastFails) {
  const auto x = testing::HelloWorldTroll();
  EXPECT_THROW(Lift(x, RealSemiring{}, [](double) { return std::nan(""); }),
               InvalidWeightError);
}

TEST(ShortestDistanceTest, HelloWorldTroll) {
  const auto x = testing::HelloWorldTroll();
  const auto d = ShortestDistance(x);
  EXPECT_DOUBLE_EQ(d[0], 1.0);
  EXPECT_DOUBLE_EQ(d[5], 6.0);
  EXPECT_DOUBLE_EQ(ShortestDistanceToFinal(x)[0], 18.0);
  EXPECT_DOUBLE_EQ(SumPaths(x), 18.0);
}

TEST(ShortestDistanceTest, MatchesOracleOnRandomMachines) {
  std::mt19937_64 rng(3);
  const RealSemiring sr;
  for (int trial = 0; trial < 100; ++trial) {
    const auto fst = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(), {});
    const auto got = ShortestDistance(fst);
    const auto want = testing::BruteForwardDistance(fst);
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      ASSERT_TRUE(sr.ApproxEqual(got[i], want[i])) << "trial " << trial << " state " << i;
    }
  }
}

TEST(ShortestDistanceTest, MinPlusOnCyclicMachine) {
  const auto m = Lift(testing::DoubleAToB(), MinSemiring{}, [](double w) { return w; });
  const auto d = ShortestDistance(m);
  EXPECT_EQ(d[0], 0.0);
  EXPECT_EQ(d[1], 0.5);
  const auto c = Lift(Compose(FromSequence("aaa"), testing::DoubleAToB()), MinSemiring{},
                      [](double w) { return w; });
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : testing::BrutePaths(c)) best = std::min(best, p.weight);
  EXPECT_EQ(SumPaths(c), best);
}

TEST(ShortestDistanceTest, DivergentCycleFails) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 0, 'a', 'a', 2.0);
  fst.SetFinalWeight(0, 1.0);
  EXPECT_THROW(ShortestDistance(fst), ConvergenceError);
  EXPECT_THROW(SumPaths(fst), ConvergenceError);
}

TEST(SumPathsTest, Basics) {
  EXPECT_TRUE(SumPaths(FromSequence("hello")).value);
  Fst<RealSemiring> dead;
  dead.AddState();
  dead.SetInitialState(0);
  EXPECT_EQ(SumPaths(dead), 0.0);
  EXPECT_EQ(SumPaths(Fst<RealSemiring>()), 0.0);
}

TEST(SumPathsTest, UnionAndConcatLaws) {
  std::mt19937_64 rng(9);
  const RealSemiring sr;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(), {});
    const auto b = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(), {});
    ASSERT_TRUE(sr.ApproxEqual(SumPaths(Union(a, b)), SumPaths(a) + SumPaths(b)));
    ASSERT_TRUE(sr.ApproxEqual(SumPaths(Concat(a, b)), SumPaths(a) * SumPaths(b)));
  }
}

TEST(ShortestPathTest, MinAndMaxOnComposedMachine) {
  const auto real = Compose(FromSequence("aaa"), testing::DoubleAToB());
  const auto copy = [](double w) { return w; };
  const auto min = ShortestPath(Lift(real, MinSemiring{}, copy));
  const auto max = ShortestPath(Lift(real, MaxSemiring{}, copy));
  EXPECT_EQ(min.distance, 3.5);
  EXPECT_EQ(LabelsToDisplay(min.path.output), "ab");
  EXPECT_EQ(max.distance, 4.0);
  EXPECT_EQ(LabelsToDisplay(max.path.output), "aaa");
  EXPECT_NE(min.path.output, max.path.output);
}

TEST(ShortestPathTest, SinglePathAndTwoCosts) {
  const auto single = ShortestPath(FromSequence<TropicalSemiring>("abc"));
  EXPECT_EQ(LabelsToDisplay(single.path.input), "abc");
  EXPECT_EQ(single.distance, 0.0);
  Fst<TropicalSemiring> two;
  for (int i = 0; i < 3; ++i) two.AddState();
  two.SetInitialState(0);
  two.AddArc(0, 1, 'x', 'x', 5.0);
  two.AddArc(0, 2, 'y', 'y', 3.0);
  two.SetFinalWeight(1, 0.0);
  two.SetFinalWeight(2, 0.0);
  const auto best = ShortestPath(two);
  EXPECT_EQ(best.distance, 3.0);
  EXPECT_EQ(LabelsToDisplay(best.path.input), "y");
}

TEST(ShortestPathTest, Errors) {
  EXPECT_THROW(ShortestPath(testing::HelloWorldTroll()), UnsupportedOperationError);
  EXPECT_THROW(ShortestPath(Fst<TropicalSemiring>()), NoAcceptingPathError);
  Fst<TropicalSemiring> dead;
  dead.AddState();
  dead.SetInitialState(0);
  EXPECT_THROW(ShortestPath(dead), NoAcceptingPathError);
}

TEST(ShortestPathTest, MatchesEnumerationOnRandomMachines) {
  std::mt19937_64 rng(5);
  const RealSemiring real;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = testing::RandomAcyclicFst(rng, real, testing::PositiveRealWeights(), {});
    const auto t = Lift(r, TropicalSemiring{}, [](double w) { return w; });
    const auto paths = testing::BrutePaths(t);
    if (paths.empty()) continue;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : paths) best = std::min(best, p.weight);
    const auto got = ShortestPath(t);
    ASSERT_TRUE(t.semiring().ApproxEqual(got.distance, best)) << "trial " << trial;
    ASSERT_TRUE(t.semiring().ApproxEqual(PathWeight(t, got.path.arcs), got.distance));
    ++checked;
  }
  EXPECT_GT(checked, 30);
}

TEST(LanguagePreservationTest, RandomRealMachines) {
  std::mt19937_64 rng(13);
  const RealSemiring sr;
  testing::RandomFstOptions acceptor;
  acceptor.acceptor = true;
  for (int trial = 0; trial < 100; ++trial) {
    const bool as_acceptor = trial % 2 == 0;
    const auto x = testing::RandomAcyclicFst(rng, sr, testing::PositiveRealWeights(),
                                             as_acceptor ? acceptor : testing::RandomFstOptions{});
    const auto oracle = BruteLanguage(x);
    auto same = [&](const Fst<RealSemiring>& y) {
      return testing::SameBruteLanguage(sr, oracle, BruteLanguage(y));
    };
    ASSERT_TRUE(same(RemoveEpsilon(x))) << "rmepsilon, trial " << trial;
    ASSERT_TRUE(same(Reverse(Reverse(x)))) << "reverse, trial " << trial;
    ASSERT_TRUE(same(Push(x, PushDirection::kInitial))) << "push, trial " << trial;
    ASSERT_TRUE(same(Push(x, PushDirection::kFinal))) << "push final, trial " << trial;
    ASSERT_TRUE(same(Lift(x, sr, [](double w) { return w; }))) << "lift, trial " << trial;
    if (as_acceptor) {
      const auto d = Determinize(RemoveEpsilon(x));
      ASSERT_TRUE(IsDeterministic(d));
      ASSERT_TRUE(same(d)) << "determinize, trial " << trial;
    }
  }
}

TEST(RandomPathTest, SinglePath) {
  const auto fsa = FromSequence<RealSemiring>("abc");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = RandomPath(fsa, {.seed = seed});
    EXPECT_EQ(LabelsToDisplay(p.input), "abc");
  }
}

TEST(RandomPathTest, DeterministicGivenSeed) {
  const auto x = testing::HelloWorldTroll();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(RandomPath(x, {.seed = seed}).output, RandomPath(x, {.seed = seed}).output);
  }
}

TEST(RandomPathTest, ZeroBranchNeverTaken) {
  Fst<RealSemiring> fst;
  for (int i = 0; i < 3; ++i) fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 1, 'a', 'a', 1.0);
  fst.AddArc(0, 2, 'b', 'b', 0.0);
  fst.SetFinalWeight(1, 1.0);
  fst.SetFinalWeight(2, 1.0);
  for (std::uint64_t seed = 0; seed < 10000; ++seed) {
    ASSERT_EQ(RandomPath(fst, {.seed = seed}).input, LabelsFromUtf8("a"));
  }
}

TEST(RandomPathTest, Errors) {
  EXPECT_THROW(RandomPath(Fst<RealSemiring>()), NoAcceptingPathError);
  Fst<RealSemiring> dead;
  dead.AddState();
  dead.AddState();
  dead.SetInitialState(0);
  dead.AddArc(0, 1, 'a', 'a', 1.0);
  EXPECT_THROW(RandomPath(dead), SamplingDeadEndError);
  Fst<RealSemiring> negative;
  negative.AddState();
  negative.SetInitialState(0);
  negative.SetFinalWeight(0, -1.0);
  EXPECT_THROW(RandomPath(negative), InvalidSamplingWeightError);
  Fst<RealSemiring> loop;
  loop.AddState();
  loop.SetInitialState(0);
  loop.AddArc(0, 0, 'a', 'a', 1.0);
  EXPECT_THROW(RandomPath(loop, {.seed = 0, .max_steps = 50}), CycleLimitError);
}

TEST(RandomPathTest, SamplingFollowsWeights) {
  // Two arcs out of state 0 with weights 1 and 3.
  Fst<RealSemiring> fst;
  for (int i = 0; i < 2; ++i) fst.AddState();
  fst.SetInitialState(0);
  fst.AddArc(0, 1, 'a', 'a', 1.0);
  fst.AddArc(0, 1, 'b', 'b', 3.0);
  fst.SetFinalWeight(1, 1.0);
  int b = 0;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) {
    if (RandomPath(fst, {.seed = static_cast<std::uint64_t>(seed)}).input[0] == Label('b')) ++b;
  }
  // Four standard deviations around 0.75.
  EXPECT_NEAR(static_cast<double>(b) / n, 0.75, 4 * std::sqrt(0.75 * 0.25 / n));
}

// Sampling is local: the raw machine branches 1 vs 1 at the start, while
// pushing toward the initial state moves the 6 vs 12 path mass onto it.
TEST(RandomPathTest, TrollFrequencyRawAndPushed) {
  const auto raw = testing::HelloWorldTroll();
  const auto pushed = Push(raw, PushDirection::kInitial);
  const auto troll = LabelsFromUtf8("troll");
  int raw_troll = 0, pushed_troll = 0;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) {
    const RandomPathOptions options{.seed = static_cast<std::uint64_t>(seed)};
    if (RandomPath(raw, options).output == troll) ++raw_troll;
    if (RandomPath(pushed, options).output == troll) ++pushed_troll;
  }
  EXPECT_NEAR(static_cast<double>(raw_troll) / n, 0.5, 0.03);
  EXPECT_NEAR(static_cast<double>(pushed_troll) / n, 2.0 / 3.0, 0.03);
}

}  // namespace
}  // namespace wfst
