#include <gtest/gtest.h>

#include <numeric>

#include "crossmetric/error.hpp"
#include "crossmetric/mst_exact.hpp"
#include "support.hpp"

using namespace crossmetric;
using namespace testing_support;

namespace {

std::vector<LineId> all_lines(std::size_t m) {
  std::vector<LineId> v(m);
  std::iota(v.begin(), v.end(), LineId{0});
  return v;
}

std::uint64_t oracle_weight(const Instance& inst, const std::vector<LineId>* subset = nullptr) {
  return prim_weight(inst.n(), [&](std::size_t a, std::size_t b) {
    return separating(inst.hyperplanes, inst.points[a], inst.points[b], subset);
  });
}

void expect_true_weights(const CrossingOracle& oracle, const SpanningForest& f) {
  for (const auto& e : f.edges()) EXPECT_EQ(e.weight, oracle.distance(e.a, e.b));
}

}  // namespace

TEST(Bruteforce, Examples) {
  const Instance single = planar({pt(3, 3)}, {line(1, 0, -1)});
  EXPECT_EQ(mst_bruteforce(single).weight, 0u);
  EXPECT_TRUE(mst_bruteforce(single).forest.edges().empty());

  const Instance tri = planar({pt(0, 0), pt(4, 0), pt(0, 4)}, {line(1, 0, -1), line(1, 0, -2), line(0, 1, -1)});
  const MstResult r = mst_bruteforce(tri);
  EXPECT_EQ(r.weight, 3u);
  ASSERT_EQ(r.forest.edges().size(), 2u);
  EXPECT_EQ(r.forest.edges()[0], (ForestEdge{0, 2, 1}));
  EXPECT_EQ(r.forest.edges()[1], (ForestEdge{0, 1, 2}));

  const Instance flat = planar({pt(0, 0), pt(1, 1), pt(2, 0), pt(1, 3)}, {line(1, 0, 10)});
  EXPECT_EQ(mst_bruteforce(flat).weight, 0u);
}

TEST(Bruteforce, TieBreakIsLexicographic) {
  // Four points in one face: every pair has weight 0, so the tree is the star at 0.
  const Instance flat = planar({pt(0, 0), pt(1, 1), pt(2, 0), pt(1, 3)}, {});
  const MstResult r = mst_bruteforce(flat);
  ASSERT_EQ(r.forest.edges().size(), 3u);
  for (PointId i = 0; i < 3; ++i) EXPECT_EQ(r.forest.edges()[i], (ForestEdge{0, i + 1, 0}));
}

TEST(Bruteforce, MatchesPrimAndSerialPath) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = random_instance(3 + seed % 30, 1 + seed % 25, 1000 + seed);
    const CrossingOracle oracle(inst);
    const MstResult par = mst_bruteforce(oracle, Exec::Parallel);
    const MstResult ser = mst_bruteforce(oracle, Exec::Serial);
    EXPECT_EQ(par.weight, oracle_weight(inst));
    EXPECT_EQ(par.forest.edges(), ser.forest.edges());
    EXPECT_TRUE(dfs_spanning_tree(inst.n(), par.forest.edges()));
    expect_true_weights(oracle, par.forest);
  }
}

TEST(Kruskal, AgreesWithBruteforce) {
  const Instance inst = random_instance(30, 30, 77);
  const CrossingOracle oracle(inst);
  const MstResult a = mst_bruteforce(oracle);
  const MstResult b = mst_kruskal(inst.n(), [&](PointId x, PointId y) { return oracle.distance(x, y); });
  EXPECT_EQ(a.forest.edges(), b.forest.edges());
}

TEST(Wavefront, Examples) {
  const Instance two = planar({pt(0, 0), pt(2, 0)}, {line(1, 0, -1)});
  const MstResult r = mst_wavefront(two);
  EXPECT_EQ(r.weight, 1u);
  ASSERT_EQ(r.forest.edges().size(), 1u);
  EXPECT_EQ(r.forest.edges()[0], (ForestEdge{0, 1, 1}));

  const Instance tri = planar({pt(0, 0), pt(4, 0), pt(0, 4)}, {line(1, 0, -1), line(1, 0, -2), line(0, 1, -1)});
  EXPECT_EQ(mst_wavefront(tri).weight, 3u);
  EXPECT_EQ(mst_wavefront(planar({pt(1, 1)}, {})).weight, 0u);
  EXPECT_THROW(mst_wavefront(random_instance(3, 3, 1, 100, 3)), DimensionUnsupported);
}

TEST(Wavefront, OracleEquivalenceExhaustive) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const std::size_t n = 2 + seed % 24;
    const std::size_t m = seed % 26;
    const Instance inst = random_instance(n, m, 5000 + seed, seed % 2 ? 1000 : 12);
    const CrossingOracle oracle(inst);
    WavefrontStats stats;
    const MstResult w = mst_wavefront(oracle, &stats);
    ASSERT_EQ(w.weight, oracle_weight(inst)) << "seed " << seed;
    ASSERT_TRUE(dfs_spanning_tree(n, w.forest.edges()));
    EXPECT_EQ(stats.underweight, 0u);
    EXPECT_EQ(stats.accepted_inexact, 0u);
    EXPECT_EQ(stats.accepted, n - 1);
    expect_true_weights(oracle, w.forest);
  }
}

TEST(Wavefront, CoincidentAndParallelLines) {
  // Duplicate geometric lines must each count toward the distance.
  const Instance inst = planar({pt(-5, -5), pt(5, 5), pt(-5, 5), pt(5, -5), pt(1, 9)},
                               {line(1, 0, 0), line(-3, 0, 0), line(0, 1, 0), line(1, 0, -2), line(1, 1, -7)});
  const CrossingOracle oracle(inst);
  EXPECT_EQ(mst_wavefront(oracle).weight, oracle_weight(inst));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance r = random_instance(12, 6, 900 + seed, 6);
    // Duplicate a few lines with scaled (possibly negated) coefficients.
    for (std::size_t i = 0; i < 3; ++i) {
      Hyperplane h = r.hyperplanes[i];
      const Coord k = i % 2 ? -2 : 3;
      for (auto& c : h.normal) c *= k;
      h.offset *= k;
      r.hyperplanes.push_back(h);
    }
    EXPECT_EQ(mst_wavefront(r).weight, oracle_weight(r)) << seed;
  }
}

TEST(BoundedForest, RadiusZeroMergesFaceMates) {
  const Instance inst = random_instance(60, 20, 31);
  const CrossingOracle oracle(inst);
  const std::vector<LineId> subset{1, 4, 9};
  SpanningForest f(inst.n());
  const auto added = bounded_spanning_forest(oracle, subset, 0, f);
  const BitVector mask = line_mask(inst.m(), subset);
  for (const auto& e : added) EXPECT_EQ(e.weight, 0u);
  for (PointId a = 0; a < inst.n(); ++a) {
    for (PointId b = 0; b < inst.n(); ++b) {
      EXPECT_EQ(f.connected(a, b), oracle.distance(a, b, mask) == 0);
    }
  }
}

TEST(BoundedForest, ConnectsEveryPairWithinTwiceTheRadius) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance inst = random_instance(40, 30, 700 + seed);
    const CrossingOracle oracle(inst);
    std::vector<LineId> subset;
    for (LineId i = 0; i < inst.m(); i += 1 + seed % 3) subset.push_back(i);
    const BitVector mask = line_mask(inst.m(), subset);
    for (int radius : {1, 2, 3, 5}) {
      SpanningForest f(inst.n());
      const auto added = bounded_spanning_forest(oracle, subset, radius, f);
      EXPECT_EQ(added.size(), inst.n() - f.component_count());
      for (const auto& e : added) EXPECT_EQ(e.weight, oracle.distance(e.a, e.b, mask));
      for (PointId a = 0; a < inst.n(); ++a) {
        for (PointId b = a + 1; b < inst.n(); ++b) {
          if (oracle.distance(a, b, mask) <= static_cast<std::uint32_t>(2 * radius)) {
            ASSERT_TRUE(f.connected(a, b)) << seed << " r=" << radius << " " << a << "," << b;
          }
        }
      }
    }
  }
}

TEST(BoundedForest, FullRadiusIsMinimumSpanningTree) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = random_instance(30, 25, 40 + seed);
    const CrossingOracle oracle(inst);
    SpanningForest f(inst.n());
    bounded_spanning_forest(oracle, all_lines(inst.m()), static_cast<int>(inst.n() + inst.m()), f);
    EXPECT_TRUE(f.spanning());
    EXPECT_EQ(f.total_weight(), oracle_weight(inst));
  }
}

TEST(BoundedForest, SubsetMstWeightsUnderSubset) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Instance inst = random_instance(25, 30, 140 + seed);
    const CrossingOracle oracle(inst);
    std::vector<LineId> subset;
    for (LineId i = seed % 4; i < inst.m(); i += 3) subset.push_back(i);
    SpanningForest f(inst.n());
    bounded_spanning_forest(oracle, subset, kUnboundedRadius, f);
    EXPECT_EQ(f.total_weight(), oracle_weight(inst, &subset));
  }
}

TEST(BoundedForest, SpanningForestIsUnchanged) {
  const Instance inst = random_instance(10, 10, 3);
  const CrossingOracle oracle(inst);
  SpanningForest f(inst.n());
  for (PointId p = 1; p < inst.n(); ++p) f.add_edge(0, p, 99);
  const auto before = f.edges();
  EXPECT_TRUE(bounded_spanning_forest(oracle, all_lines(inst.m()), 4, f).empty());
  EXPECT_EQ(f.edges(), before);
}

TEST(BoundedForest, ExistingComponentsAreRespected) {
  const Instance inst = random_instance(30, 20, 12);
  const CrossingOracle oracle(inst);
  SpanningForest f(inst.n());
  f.add_edge(0, 1, oracle.distance(0, 1));
  f.add_edge(2, 3, oracle.distance(2, 3));
  bounded_spanning_forest(oracle, all_lines(inst.m()), kUnboundedRadius, f);
  EXPECT_TRUE(f.spanning());
  EXPECT_TRUE(dfs_spanning_tree(inst.n(), f.edges()));
}

TEST(BoundedForest, BudgetAborts) {
  const Instance inst = random_instance(30, 40, 13);
  const CrossingOracle oracle(inst);
  SpanningForest f(inst.n());
  PropagationOptions opts;
  opts.face_budget = 5;
  EXPECT_THROW(bounded_spanning_forest(oracle, all_lines(inst.m()), kUnboundedRadius, f, opts), BudgetExceeded);
}

TEST(BoundedForest, FullWeightingRecordsTrueDistance) {
  const Instance inst = random_instance(30, 30, 21);
  const CrossingOracle oracle(inst);
  const std::vector<LineId> subset{0, 5, 10, 15, 20, 25};
  SpanningForest f(inst.n());
  PropagationOptions opts;
  opts.weighting = EdgeWeighting::Full;
  const auto added = bounded_spanning_forest(oracle, subset, kUnboundedRadius, f, opts);
  for (const auto& e : added) EXPECT_EQ(e.weight, oracle.distance(e.a, e.b));
}

TEST(Forest, RejectsCyclesAndTracksComponents) {
  SpanningForest f(4);
  EXPECT_EQ(f.component_count(), 4u);
  EXPECT_TRUE(f.add_edge(0, 1, 2));
  EXPECT_TRUE(f.add_edge(2, 3, 1));
  EXPECT_FALSE(f.add_edge(1, 0, 5));
  EXPECT_TRUE(f.add_edge(1, 3, 4));
  EXPECT_FALSE(f.add_edge(0, 2, 0));
  EXPECT_TRUE(f.spanning());
  EXPECT_EQ(f.total_weight(), 7u);
  EXPECT_TRUE(is_spanning_tree(4, f.edges()));
  EXPECT_FALSE(is_spanning_tree(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}}));
}
