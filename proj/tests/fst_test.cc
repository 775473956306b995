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

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "support/figures.h"
#include "support/oracles.h"
#include "wfst/fst.h"
#include "wfst/path.h"

namespace wfst {
namespace {

TEST(LabelTest, Conversions) {
  EXPECT_EQ(Label('h').value(), 104u);
  EXPECT_EQ(Label("w").value(), 119u);
  EXPECT_EQ(Label("ε").value(), 0x3b5u);
  EXPECT_EQ(Label(7).value(), 7u);
  EXPECT_TRUE(kEpsilon.is_epsilon());
  EXPECT_THROW(Label("ab"), InvalidLabelError);
  EXPECT_THROW(Label(""), InvalidLabelError);
  EXPECT_THROW(Label(-1), InvalidLabelError);
}

TEST(LabelTest, Utf8) {
  const auto labels = LabelsFromUtf8("aé€");
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_EQ(labels[1].value(), 0xe9u);
  EXPECT_EQ(labels[2].value(), 0x20acu);
  EXPECT_THROW(LabelsFromUtf8("\xff"), InvalidLabelError);
  EXPECT_EQ(LabelsToDisplay(labels), "aé€");
  EXPECT_EQ(LabelsToDisplay({Label(104), Label(0u), Label(7)}), "[104 0 7]");
}

TEST(FstTest, NewFstIsEmpty) {
  Fst<BooleanSemiring> b;
  EXPECT_EQ(b.NumStates(), 0);
  Fst<RealSemiring> r;
  EXPECT_TRUE(EnumeratePaths(r).paths.empty());
  EXPECT_EQ(r.descriptor().name, "real");
}

TEST(FstTest, StatesAreDense) {
  Fst<BooleanSemiring> fst;
  EXPECT_EQ(fst.AddState(), 0);
  for (int i = 1; i < 5; ++i) fst.AddState();
  EXPECT_EQ(fst.AddState(), 5);
  EXPECT_EQ(fst.NumStates(), 6);
}

TEST(FstTest, AddArcLabelsAndDefaultWeight) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.AddState();
  fst.AddArc(0, 1, 'h', 'w');
  fst.AddArc(0, 0, 'a', 'a', 1.0);
  ASSERT_EQ(fst.NumArcs(0), 2u);
  const auto& arc = fst.Arcs(0)[0];
  EXPECT_EQ(arc.input.value(), 104u);
  EXPECT_EQ(arc.output.value(), 119u);
  EXPECT_EQ(arc.weight, 1.0);
  EXPECT_EQ(fst.Arcs(0)[1].target, 0);
  fst.Validate();
}

TEST(FstTest, MutationErrors) {
  Fst<RealSemiring> fst;
  fst.AddState();
  EXPECT_THROW(fst.AddArc(0, 3, 'a', 'a'), InvalidStateError);
  EXPECT_THROW(fst.AddArc(-1, 0, 'a', 'a'), InvalidStateError);
  EXPECT_THROW(fst.SetInitialState(2), InvalidStateError);
  EXPECT_THROW(fst.SetFinalWeight(1, 1.0), InvalidStateError);
  EXPECT_THROW(fst.AddArc(0, 0, 'a', 'a', std::nan("")), InvalidWeightError);
}

TEST(FstTest, BooleanWeightsCastOnMutation) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.AddState();
  fst.AddArc(0, 1, 'a', 'a', BooleanWeight{true});
  fst.SetFinalWeight(1, BooleanWeight{true});
  fst.SetFinalWeight(0, BooleanWeight{false});
  EXPECT_EQ(fst.Arcs(0)[0].weight, 1.0);
  EXPECT_EQ(fst.FinalWeight(1), 1.0);
  EXPECT_FALSE(fst.IsFinal(0));
}

TEST(FstTest, InitialStateSecondCallWins) {
  Fst<BooleanSemiring> fst;
  fst.AddState();
  fst.AddState();
  fst.SetFinalWeight(0, BooleanWeight{true});
  fst.SetFinalWeight(1, BooleanWeight{true});
  fst.SetInitialState(0);
  fst.SetInitialState(1);
  EXPECT_EQ(fst.InitialState(), 1);
  const auto paths = EnumeratePaths(fst);
  ASSERT_EQ(paths.paths.size(), 1u);
  fst.ClearInitialState();
  EXPECT_TRUE(EnumeratePaths(fst).paths.empty());
}

TEST(FstTest, ZeroFinalWeightMeansNonFinal) {
  Fst<RealSemiring> fst;
  fst.AddState();
  fst.SetFinalWeight(0, 2.0);
  EXPECT_TRUE(fst.IsFinal(0));
  fst.SetFinalWeight(0, 0.0);
  EXPECT_FALSE(fst.IsFinal(0));
  EXPECT_EQ(fst.FinalWeight(0), 0.0);
}

TEST(FstTest, HelloChain) {
  const auto fst = FromSequence("hello");
  EXPECT_EQ(fst.NumStates(), 6);
  EXPECT_TRUE(fst.IsFinal(5));
  EXPECT_EQ(fst.InitialState(), 0);
  EXPECT_TRUE(fst.IsAcceptor());
  const auto paths = EnumeratePaths(fst).paths;
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(LabelsToDisplay(paths[0].input), "hello");
}

TEST(FstTest, EmptySequence) {
  const auto fst = FromSequence("");
  EXPECT_EQ(fst.NumStates(), 1);
  EXPECT_TRUE(fst.IsFinal(0));
  EXPECT_EQ(fst.InitialState(), 0);
}

TEST(FstTest, SequenceRejectsEpsilon) {
  const std::vector<Label> labels{Label('a'), kEpsilon};
  EXPECT_THROW(FromSequence(std::span<const Label>(labels)), InvalidLabelError);
}

TEST(FstTest, SequenceAcceptsExactlyItsString) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 12), ch('a', 'z');
  for (int trial = 0; trial < 1000; ++trial) {
    std::string s(static_cast<std::size_t>(len(rng)), 'a');
    for (char& c : s) c = static_cast<char>(ch(rng));
    const auto fst = FromSequence<RealSemiring>(s);
    ASSERT_EQ(fst.NumStates(), static_cast<StateId>(s.size() + 1));
    fst.Validate();
    const auto paths = EnumeratePaths(fst).paths;
    ASSERT_EQ(paths.size(), 1u) << s;
    ASSERT_EQ(paths[0].input, LabelsFromUtf8(s)) << s;
    ASSERT_EQ(paths[0].weight, 1.0);
  }
}

TEST(PathTest, HelloWorldTrollPaths) {
  const auto fst = testing::HelloWorldTroll();
  const auto list = EnumeratePaths(fst);
  EXPECT_FALSE(list.truncated);
  ASSERT_EQ(list.paths.size(), 2u);
  EXPECT_EQ(LabelsToDisplay(list.paths[0].output), "world");
  EXPECT_EQ(list.paths[0].weight, 6.0);
  EXPECT_EQ(LabelsToDisplay(list.paths[1].output), "troll");
  EXPECT_EQ(list.paths[1].weight, 12.0);
  for (const auto& p : list.paths) {
    EXPECT_EQ(PathWeight(fst, p.arcs), p.weight);
    EXPECT_EQ(p.arcs.front().source, 0);
    for (std::size_t i = 1; i < p.arcs.size(); ++i) {
      EXPECT_EQ(p.arcs[i - 1].target, p.arcs[i].source);
    }
    EXPECT_TRUE(fst.IsFinal(p.arcs.back().target));
  }
}

TEST(PathTest, EnumerationLimits) {
  auto fst = FromSequence<RealSemiring>("a");
  fst.AddArc(1, 0, 'b', 'b');  // cycle
  EnumerateOptions options;
  options.max_paths = 5;
  const auto list = EnumeratePaths(fst, options);
  EXPECT_TRUE(list.truncated);
  EXPECT_EQ(list.paths.size(), 5u);
  options.max_paths = 1000;
  options.max_length = 7;
  const auto bounded = EnumeratePaths(fst, options);
  EXPECT_TRUE(bounded.truncated);
  EXPECT_EQ(bounded.paths.size(), 4u);  // a, aba, ababa, abababa
}

TEST(PathTest, DeadBranchesAreSkipped) {
  auto fst = FromSequence<RealSemiring>("ab");
  const StateId dead = fst.AddState();
  fst.AddArc(0, dead, 'x', 'x');
  const auto paths = EnumeratePaths(fst).paths;
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_FALSE(EquivalentByEnumeration(FromSequence("hello"), FromSequence("help")));
  EXPECT_TRUE(EquivalentByEnumeration(fst, fst));
}

TEST(PathTest, EnumerationMatchesOracle) {
  const auto fst = testing::DoubleAToB();
  EnumerateOptions options;
  options.max_length = 6;
  options.max_paths = 100000;
  const auto lang = LanguageOf(fst, options);
  const auto oracle = testing::BruteLanguage(fst, 5);
  // Every oracle string of at most five arcs appears with the same weight.
  for (const auto& [key, w] : oracle) {
    StringPair k;
    for (auto v : key.first) k.first.push_back(Label(v));
    for (auto v : key.second) k.second.push_back(Label(v));
    ASSERT_TRUE(lang.weights.contains(k));
    EXPECT_TRUE(fst.semiring().ApproxEqual(lang.weights.at(k), w));
  }
}

}  // namespace
}  // namespace wfst
