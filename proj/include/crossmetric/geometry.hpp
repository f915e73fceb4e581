#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crossmetric/bits.hpp"

namespace crossmetric {

using Coord = std::int64_t;
using Wide = __int128;
using PointId = std::uint32_t;
using LineId = std::uint32_t;

/// Coordinate and coefficient limits. With these caps every predicate used by
/// the library (side tests, planar vertex ordering) fits in 128-bit integers.
inline constexpr Coord kMaxCoord = Coord{1} << 30;
inline constexpr Coord kMaxNormal = Coord{1} << 30;
inline constexpr Coord kMaxOffset = Coord{1} << 62;

struct Point {
  std::vector<Coord> coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const Point&, const Point&) = default;
};

/// The locus normal·x + offset = 0. The positive side is normal·x + offset > 0.
struct Hyperplane {
  std::vector<Coord> normal;
  Coord offset = 0;

  std::size_t dim() const { return normal.size(); }
  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// A point set P and hyperplane set L sharing one dimension. Hyperplane ids are
/// their positions in `hyperplanes`; point ids likewise.
struct Instance {
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  std::vector<Point> points;
  std::vector<Hyperplane> hyperplanes;

  std::size_t n() const { return points.size(); }
  std::size_t m() const { return hyperplanes.size(); }
  friend bool operator==(const Instance&, const Instance&) = default;
};

/// normal·p + offset in exact arithmetic.
Wide evaluate(const Hyperplane& h, const Point& p);

/// +1 or -1; throws OnHyperplane when p lies on h.
int side(const Hyperplane& h, const Point& p);

/// Bit i set iff p is strictly on the positive side of hyperplane i.
BitVector sign_vector(const Instance& inst, const Point& p);

/// Number of hyperplanes strictly separating p and q.
std::size_t crossing_distance(const Instance& inst, const Point& p, const Point& q);

/// Checks shapes, magnitude caps, nonzero normals and general position.
/// Throws InvalidInstance or OnHyperplane.
void validate(const Instance& inst);

struct GenerateParams {
  std::size_t dim = 2;
  std::size_t points = 0;
  std::size_t hyperplanes = 0;
  Coord range = 1000;  // coordinates drawn from [-range, range]
  std::uint64_t seed = 0;
};

/// Uniform random instance. In the plane, lines pass through two random lattice
/// points of [-range/2, range/2]^2; for d > 2 normals are random in that box and
/// each hyperplane passes through a random lattice point. Points on a
/// hyperplane are resampled, at most 1000 times each (ResampleExhausted).
Instance generate_instance(const GenerateParams& params);

/// Points drawn around a few random centers; useful for MSTs dominated by a
/// handful of long edges.
Instance generate_clustered_instance(const GenerateParams& params, std::size_t clusters, Coord spread);

}  // namespace crossmetric
