#include <gtest/gtest.h>

#include <string>

#include "crossmetric/error.hpp"
#include "crossmetric/geometry.hpp"
#include "crossmetric/instance_io.hpp"
#include "crossmetric/oracle.hpp"
#include "support.hpp"

using namespace crossmetric;
using namespace testing_support;

TEST(Side, SignOfSubstitution) {
  const Hyperplane h = line(1, 0, -1);
  EXPECT_EQ(side(h, pt(0, 0)), -1);
  EXPECT_EQ(side(h, pt(2, 0)), 1);
  EXPECT_THROW(side(h, pt(1, 5)), OnHyperplane);
}

TEST(Side, ExactAtCoordinateCap) {
  // normal·p is 2^60 + 2^60 - (2^61 - 1) = 1: needs more than 64 bits on the way.
  const Coord big = kMaxCoord;
  const Hyperplane h{{big, big}, -((Coord{1} << 61) - 1)};
  EXPECT_EQ(side(h, pt(big, big)), 1);
  const Hyperplane g{{big, big}, -(Coord{1} << 61)};
  EXPECT_THROW(side(g, pt(big, big)), OnHyperplane);
}

TEST(SignVector, Examples) {
  const Instance inst = planar({}, {line(1, 0, -1), line(0, 1, -1)});
  auto bits = [&](Point p) {
    const BitVector v = sign_vector(inst, p);
    return std::string{v.get(0) ? '1' : '0', v.get(1) ? '1' : '0'};
  };
  EXPECT_EQ(bits(pt(0, 0)), "00");
  EXPECT_EQ(bits(pt(2, 0)), "10");
  EXPECT_EQ(bits(pt(2, 2)), "11");
}

TEST(CrossingDistance, Examples) {
  const Instance one = planar({}, {line(1, 0, -1)});
  EXPECT_EQ(crossing_distance(one, pt(0, 0), pt(2, 0)), 1u);
  const Instance three = planar({}, {line(1, 0, -1), line(1, 0, -2), line(0, 1, -1)});
  EXPECT_EQ(crossing_distance(three, pt(0, 0), pt(0, 4)), 1u);
  EXPECT_EQ(crossing_distance(three, pt(3, 3), pt(3, 3)), 0u);
}

TEST(CrossingDistance, MatchesSubstitutionOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Instance inst = random_instance(15, 20, seed);
    for (std::size_t i = 0; i < inst.n(); ++i) {
      for (std::size_t j = 0; j < inst.n(); ++j) {
        ASSERT_EQ(crossing_distance(inst, inst.points[i], inst.points[j]),
                  separating(inst.hyperplanes, inst.points[i], inst.points[j]));
      }
    }
  }
}

TEST(CrossingDistance, MetricProperties) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Instance inst = random_instance(12, 25, 100 + seed);
    const CrossingOracle oracle(inst);
    std::vector<LineId> half;
    for (LineId i = 0; i < inst.m(); i += 2) half.push_back(i);
    const BitVector mask = line_mask(inst.m(), half);
    for (PointId a = 0; a < inst.n(); ++a) {
      for (PointId b = 0; b < inst.n(); ++b) {
        ASSERT_EQ(oracle.distance(a, b), oracle.distance(b, a));
        ASSERT_LE(oracle.distance(a, b, mask), oracle.distance(a, b));
        for (PointId c = 0; c < inst.n(); ++c) {
          ASSERT_LE(oracle.distance(a, c), oracle.distance(a, b) + oracle.distance(b, c));
        }
      }
    }
  }
}

TEST(Generate, EmptyAndDeterministic) {
  const Instance empty = random_instance(0, 0, 9, 10);
  EXPECT_EQ(empty.n(), 0u);
  EXPECT_EQ(empty.m(), 0u);
  EXPECT_EQ(random_instance(5, 5, 42, 100), random_instance(5, 5, 42, 100));
  EXPECT_NE(random_instance(5, 5, 42, 100), random_instance(5, 5, 43, 100));
}

TEST(Generate, GeneralPositionAtScale) {
  const Instance inst = random_instance(50, 50, 5, 1000000);
  for (const auto& p : inst.points) {
    for (const auto& h : inst.hyperplanes) ASSERT_NO_THROW(side(h, p));
  }
  EXPECT_NO_THROW(validate(inst));
}

TEST(Generate, HigherDimension) {
  const Instance inst = random_instance(30, 30, 8, 1000, 3);
  EXPECT_EQ(inst.dim, 3u);
  EXPECT_NO_THROW(validate(inst));
  for (const auto& h : inst.hyperplanes) EXPECT_EQ(h.normal.size(), 3u);
}

TEST(Generate, RejectsBadParams) {
  GenerateParams g;
  g.range = kMaxCoord + 1;
  EXPECT_THROW(generate_instance(g), InvalidInstance);
  g.range = 10;
  g.dim = 1;
  EXPECT_THROW(generate_instance(g), InvalidInstance);
}

TEST(Generate, TinyRangeExhausts) {
  // Range 0 puts every point at the origin and every line through it.
  GenerateParams g;
  g.points = 1;
  g.hyperplanes = 1;
  g.range = 0;
  EXPECT_THROW(generate_instance(g), ResampleExhausted);
}

TEST(Validate, RejectsBadInstances) {
  EXPECT_THROW(validate(planar({pt(1, 0)}, {line(1, 0, -1)})), OnHyperplane);
  EXPECT_THROW(validate(planar({}, {line(0, 0, 1)})), InvalidInstance);
  EXPECT_THROW(validate(planar({pt(kMaxCoord + 1, 0)}, {})), InvalidInstance);
  Instance wrong = planar({Point{{1, 2, 3}}}, {});
  EXPECT_THROW(validate(wrong), InvalidInstance);
}

TEST(InstanceJson, CanonicalRoundTrip) {
  const std::string text =
      R"({"dim":2,"seed":42,"points":[[0,0],[2,0]],"hyperplanes":[{"normal":[1,0],"offset":-1}]})";
  const Instance inst = instance_from_json(text);
  EXPECT_EQ(inst.n(), 2u);
  EXPECT_EQ(inst.hyperplanes[0].offset, -1);
  EXPECT_EQ(instance_to_json(inst), text);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance r = random_instance(10, 10, seed);
    const std::string once = instance_to_json(r);
    EXPECT_EQ(instance_from_json(once), r);
    EXPECT_EQ(instance_to_json(instance_from_json(once)), once);
  }
}

TEST(InstanceJson, AcceptsWhitespace) {
  const Instance inst = instance_from_json(R"( { "dim" : 2, "seed": 1, "points": [], "hyperplanes": [] } )");
  EXPECT_EQ(instance_to_json(inst), R"({"dim":2,"seed":1,"points":[],"hyperplanes":[]})");
}

TEST(InstanceJson, StrictRejections) {
  EXPECT_THROW(instance_from_json(R"({"dim":2,"seed":1,"points":[],"hyperplanes":[],"x":1})"), InvalidInstance);
  EXPECT_THROW(instance_from_json(R"({"dim":2,"points":[],"hyperplanes":[]})"), InvalidInstance);
  EXPECT_THROW(instance_from_json(R"({"dim":2,"seed":1,"points":[[0.5,1]],"hyperplanes":[]})"), InvalidInstance);
  EXPECT_THROW(instance_from_json(R"({"dim":2,"seed":1,"points":[[0,1,2]],"hyperplanes":[]})"), InvalidInstance);
  EXPECT_THROW(instance_from_json(R"({"dim":2,"seed":1,"points":[],"hyperplanes":[{"normal":[1,0]}]})"),
               InvalidInstance);
  EXPECT_THROW(instance_from_json("not json"), InvalidInstance);
  EXPECT_THROW(instance_from_json(R"({"dim":2,"seed":1,"points":[[1,0]],"hyperplanes":[{"normal":[1,0],"offset":-1}]})"),
               OnHyperplane);
}

TEST(InstanceJson, DigestTracksContent) {
  const Instance a = random_instance(5, 5, 1);
  Instance b = a;
  EXPECT_EQ(instance_digest(a), instance_digest(b));
  EXPECT_EQ(instance_digest(a).size(), 16u);
  b.seed += 1;
  EXPECT_NE(instance_digest(a), instance_digest(b));
}
