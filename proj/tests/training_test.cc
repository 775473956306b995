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

#include <gtest/gtest.h>

#include "support/figures.h"
#include "support/oracles.h"
#include "wfst/algorithms.h"
#include "wfst/text_io.h"
#include "wfst/training.h"

namespace wfst {
namespace {

// HelloWorldTroll over diff weights with every non-unit weight trainable.
Fst<DiffSemiring> TrainableHello(const DiffSemiring& sr) {
  return Lift(testing::HelloWorldTroll(), sr, [&](double v) {
    return v == 1.0 ? DiffWeight::Constant(v) : Parameter(sr.tape(), v);
  });
}

TEST(LossTest, OnlyPathGivesZero) {
  const DiffSemiring sr;
  const auto full = Lift(FromSequence<RealSemiring>("ab"), sr,
                         [&](double v) { return Parameter(sr.tape(), v); });
  const DiffWeight loss = LogLikelihoodLoss(full, FromSequence("ab"));
  EXPECT_DOUBLE_EQ(loss.value, 0.0);
}

TEST(LossTest, WorldVersusTroll) {
  const DiffSemiring sr;
  const auto full = TrainableHello(sr);
  const DiffWeight world = PairLoss(full, LabelsFromUtf8("hello"), LabelsFromUtf8("world"));
  EXPECT_NEAR(world.value, -std::log(6.0 / 18.0), 1e-12);
  const DiffWeight troll = PairLoss(full, LabelsFromUtf8("hello"), LabelsFromUtf8("troll"));
  EXPECT_NEAR(troll.value, -std::log(12.0 / 18.0), 1e-12);
}

TEST(LossTest, ObservedTransducerForm) {
  const DiffSemiring sr;
  const auto full = TrainableHello(sr);
  const auto observed = Project(FromSequence("hello"), ProjectSide::kInput);
  const DiffWeight all = LogLikelihoodLoss(full, observed);
  EXPECT_NEAR(all.value, 0.0, 1e-12);
}

TEST(LossTest, ImpossiblePairIsADomainError) {
  const DiffSemiring sr;
  const auto full = TrainableHello(sr);
  EXPECT_THROW(PairLoss(full, LabelsFromUtf8("hello"), LabelsFromUtf8("earth")), DomainError);
}

TEST(LossTest, GradientMatchesFiniteDifferences) {
  auto loss_at = [](const std::vector<double>& x) {
    const DiffSemiring sr;
    std::size_t k = 0;
    const auto full = Lift(testing::HelloWorldTroll(), sr, [&](double v) {
      return v == 1.0 ? DiffWeight::Constant(v) : Parameter(sr.tape(), x[k++]);
    });
    return PairLoss(full, LabelsFromUtf8("hello"), LabelsFromUtf8("world")).value;
  };
  const DiffSemiring sr;
  const auto full = TrainableHello(sr);
  const DiffWeight loss = PairLoss(full, LabelsFromUtf8("hello"), LabelsFromUtf8("world"));
  const Gradients g = Backward(sr.tape(), loss);
  const auto& params = sr.tape().parameters();
  ASSERT_EQ(params.size(), 4u);
  std::vector<double> x;
  for (NodeId p : params) x.push_back(sr.tape().node(p).value);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const double fd = testing::CentralDifference(loss_at, x, i);
    EXPECT_TRUE(testing::CloseRelative(g.at(params[i]), fd, 1e-6, 1e-9))
        << i << ": " << g.at(params[i]) << " vs " << fd;
  }
}

TEST(RemapTest, SharedParametersStayShared) {
  const DiffSemiring sr;
  const auto fst = ParseText(
      "#semiring diff\n#initial 0\n0 1 97 97 w=0.5\n1 2 98 98 w=0.5\n2 3 99 99 0.25\n3 1\n", sr);
  auto tape = std::make_shared<Tape>();
  const NodeId old_w = fst.Arcs(0)[0].weight.node;
  const auto moved = RemapParameters(fst, tape, {{old_w, 0.75}});
  EXPECT_EQ(moved.Arcs(0)[0].weight.node, moved.Arcs(1)[0].weight.node);
  EXPECT_EQ(moved.Arcs(0)[0].weight.value, 0.75);
  EXPECT_EQ(moved.Arcs(2)[0].weight.value, 0.25);
  EXPECT_EQ(tape->Name(moved.Arcs(0)[0].weight.node), "w");
  EXPECT_EQ(tape->parameters().size(), 3u);  // w, 0.25, final 1
}

TEST(TrainTest, LossDecreasesMonotonically) {
  const DiffSemiring sr;
  const auto model = TrainableHello(sr);
  TrainOptions options;
  options.steps = 200;
  options.rate = 0.05;
  const TrainResult result =
      Train(model, {{LabelsFromUtf8("hello"), LabelsFromUtf8("world")}}, options);
  ASSERT_EQ(result.losses.size(), 200u);
  EXPECT_NEAR(result.losses.front(), -std::log(1.0 / 3.0), 1e-12);
  for (std::size_t i = 1; i < result.losses.size(); ++i) {
    ASSERT_LE(result.losses[i], result.losses[i - 1] + 1e-12) << "step " << i;
  }
  EXPECT_LT(result.losses.back(), result.losses.front());
  const double p_world =
      std::exp(-PairLoss(result.model, LabelsFromUtf8("hello"), LabelsFromUtf8("world")).value);
  EXPECT_GT(p_world, 1.0 / 3.0);
}

TEST(TrainTest, OnlyPathLeavesWeightsUnchanged) {
  const DiffSemiring sr;
  const auto model = Lift(FromSequence<RealSemiring>("ab"), sr,
                          [&](double v) { return Parameter(sr.tape(), v); });
  TrainOptions options;
  options.steps = 5;
  const TrainResult result = Train(model, {{LabelsFromUtf8("ab"), LabelsFromUtf8("ab")}}, options);
  EXPECT_DOUBLE_EQ(result.losses.front(), 0.0);
  for (const double l : result.losses) EXPECT_DOUBLE_EQ(l, 0.0);
  EXPECT_EQ(result.model.Arcs(0)[0].weight.value, 1.0);
  EXPECT_EQ(result.model.FinalWeight(2).value, 1.0);
}

}  // namespace
}  // namespace wfst
