#include <gtest/gtest.h>

#include <cmath>

#include "crossmetric/weight_estimate.hpp"
#include "support.hpp"

using namespace crossmetric;
using namespace testing_support;

namespace {

std::uint64_t oracle_weight(const Instance& inst) {
  return prim_weight(inst.n(), [&](std::size_t a, std::size_t b) {
    return separating(inst.hyperplanes, inst.points[a], inst.points[b]);
  });
}

}  // namespace

TEST(RoughEstimate, ZeroWeightTreeGivesAdditiveTermOnly) {
  Instance inst = planar({}, {line(1, 0, 5000), line(0, 1, 5000)});
  for (Coord i = 0; i < 40; ++i) inst.points.push_back(pt(i, 3 * i % 17));
  const CrossingOracle oracle(inst);
  SamplingConfig cfg;
  const RoughEstimate est = estimate_weight_rough(oracle, cfg);
  EXPECT_EQ(est.rate_index, 0u);
  EXPECT_EQ(est.sample_weight, 0u);
  EXPECT_NEAR(est.value, cfg.c_est * 40 * std::log(40.0), 1e-9);
}

TEST(RoughEstimate, SingleLineExaminesAllLines) {
  const Instance inst = planar({pt(0, 0), pt(2, 0), pt(3, 1)}, {line(1, 0, -1)});
  const CrossingOracle oracle(inst);
  const RoughEstimate est = estimate_weight_rough(oracle, SamplingConfig{});
  EXPECT_EQ(est.rate_index, 0u);
  EXPECT_DOUBLE_EQ(est.rate, 1.0);
  EXPECT_EQ(est.sample_weight, 1u);
  EXPECT_GE(est.value, 1.0);
}

TEST(RoughEstimate, DegenerateSizes) {
  const Instance one = planar({pt(0, 0)}, {line(1, 0, -1)});
  EXPECT_EQ(estimate_weight_rough(CrossingOracle(one), SamplingConfig{}).value, 0.0);
  const Instance none = planar({pt(0, 0), pt(5, 5)}, {});
  EXPECT_GT(estimate_weight_rough(CrossingOracle(none), SamplingConfig{}).value, 0.0);
}

TEST(RoughEstimate, UpperBoundsOptimumAndStaysModerate) {
  int covered = 0;
  const int trials = 12;
  for (int t = 0; t < trials; ++t) {
    const Instance inst = random_instance(60, 60, 4000 + t);
    const CrossingOracle oracle(inst);
    SamplingConfig cfg;
    cfg.seed = t;
    const RoughEstimate est = estimate_weight_rough(oracle, cfg);
    const double w = static_cast<double>(oracle_weight(inst));
    covered += est.value >= w;
    EXPECT_LE(est.value, 200 * (w + 60 * std::log(60.0)));
    EXPECT_GE(est.samples_run, SamplingConfig{}.repeats(60));
  }
  EXPECT_GE(covered, trials - 1);
}

TEST(RoughEstimate, DeterministicUnderSeed) {
  const Instance inst = random_instance(50, 50, 9);
  const CrossingOracle oracle(inst);
  SamplingConfig cfg;
  cfg.seed = 3;
  EXPECT_EQ(estimate_weight_rough(oracle, cfg).value, estimate_weight_rough(oracle, cfg).value);
}
