#include "crossmetric/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

namespace {

constexpr int kMaxResample = 1000;

Coord abs_coord(Coord v) { return v < 0 ? -v : v; }

// Divide a hyperplane's coefficients by their common gcd.
void normalize(Hyperplane& h) {
  Coord g = abs_coord(h.offset);
  for (Coord c : h.normal) g = std::gcd(g, abs_coord(c));
  if (g > 1) {
    for (Coord& c : h.normal) c /= g;
    h.offset /= g;
  }
}

bool on_any(const std::vector<Hyperplane>& hs, const Point& p) {
  for (const auto& h : hs) {
    if (evaluate(h, p) == 0) return true;
  }
  return false;
}

Point random_point(Rng& rng, std::size_t dim, Coord lo, Coord hi) {
  std::uniform_int_distribution<Coord> coord(lo, hi);
  Point p;
  p.coords.resize(dim);
  for (auto& c : p.coords) c = coord(rng);
  return p;
}

std::vector<Hyperplane> random_hyperplanes(Rng& rng, const GenerateParams& params) {
  const Coord half = params.range / 2;
  std::vector<Hyperplane> out;
  out.reserve(params.hyperplanes);
  for (std::size_t i = 0; i < params.hyperplanes; ++i) {
    Hyperplane h;
    int attempts = 0;
    for (;;) {
      if (++attempts > kMaxResample) {
        throw ResampleExhausted("could not draw a nondegenerate hyperplane " + std::to_string(i));
      }
      if (params.dim == 2) {
        const Point a = random_point(rng, 2, -half, half);
        const Point b = random_point(rng, 2, -half, half);
        h.normal = {a.coords[1] - b.coords[1], b.coords[0] - a.coords[0]};
        h.offset = -(h.normal[0] * a.coords[0] + h.normal[1] * a.coords[1]);
      } else {
        const Point nrm = random_point(rng, params.dim, -half, half);
        const Point q = random_point(rng, params.dim, -half, half);
        h.normal = nrm.coords;
        h.offset = 0;
        for (std::size_t k = 0; k < params.dim; ++k) h.offset -= h.normal[k] * q.coords[k];
      }
      bool zero = true;
      for (Coord c : h.normal) zero = zero && c == 0;
      if (!zero) break;
    }
    normalize(h);
    out.push_back(std::move(h));
  }
  return out;
}

void check_params(const GenerateParams& params) {
  if (params.dim < 2) throw InvalidInstance("dimension must be at least 2");
  if (params.range < 0 || params.range > kMaxCoord) throw InvalidInstance("coordinate range must lie in [0, 2^30]");
}

}  // namespace

Wide evaluate(const Hyperplane& h, const Point& p) {
  Wide acc = h.offset;
  for (std::size_t i = 0; i < h.normal.size(); ++i) acc += static_cast<Wide>(h.normal[i]) * p.coords[i];
  return acc;
}

int side(const Hyperplane& h, const Point& p) {
  const Wide v = evaluate(h, p);
  if (v == 0) throw OnHyperplane("point lies on hyperplane");
  return v > 0 ? 1 : -1;
}

BitVector sign_vector(const Instance& inst, const Point& p) {
  BitVector bits(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) bits.set(i, side(inst.hyperplanes[i], p) > 0);
  return bits;
}

std::size_t crossing_distance(const Instance& inst, const Point& p, const Point& q) {
  return hamming(sign_vector(inst, p), sign_vector(inst, q));
}

void validate(const Instance& inst) {
  if (inst.dim < 2) throw InvalidInstance("dimension must be at least 2");
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const auto& p = inst.points[i];
    if (p.dim() != inst.dim) throw InvalidInstance("point " + std::to_string(i) + " has wrong dimension");
    for (Coord c : p.coords) {
      if (abs_coord(c) > kMaxCoord) throw InvalidInstance("point " + std::to_string(i) + " exceeds 2^30");
    }
  }
  for (std::size_t i = 0; i < inst.hyperplanes.size(); ++i) {
    const auto& h = inst.hyperplanes[i];
    if (h.dim() != inst.dim) throw InvalidInstance("hyperplane " + std::to_string(i) + " has wrong dimension");
    bool zero = true;
    for (Coord c : h.normal) {
      if (abs_coord(c) > kMaxNormal) throw InvalidInstance("hyperplane " + std::to_string(i) + " normal exceeds 2^30");
      zero = zero && c == 0;
    }
    if (zero) throw InvalidInstance("hyperplane " + std::to_string(i) + " has a zero normal");
    if (abs_coord(h.offset) > kMaxOffset) throw InvalidInstance("hyperplane " + std::to_string(i) + " offset exceeds 2^62");
  }
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    for (std::size_t j = 0; j < inst.hyperplanes.size(); ++j) {
      if (evaluate(inst.hyperplanes[j], inst.points[i]) == 0) {
        throw OnHyperplane("point " + std::to_string(i) + " lies on hyperplane " + std::to_string(j));
      }
    }
  }
}

Instance generate_instance(const GenerateParams& params) {
  check_params(params);
  Rng rng = make_rng(params.seed, "generate");
  Instance inst;
  inst.dim = params.dim;
  inst.seed = params.seed;
  inst.hyperplanes = random_hyperplanes(rng, params);
  inst.points.reserve(params.points);
  for (std::size_t i = 0; i < params.points; ++i) {
    int attempts = 0;
    for (;;) {
      if (++attempts > kMaxResample) {
        throw ResampleExhausted("point " + std::to_string(i) + " kept landing on a hyperplane");
      }
      Point p = random_point(rng, params.dim, -params.range, params.range);
      if (!on_any(inst.hyperplanes, p)) {
        inst.points.push_back(std::move(p));
        break;
      }
    }
  }
  return inst;
}

Instance generate_clustered_instance(const GenerateParams& params, std::size_t clusters, Coord spread) {
  check_params(params);
  if (clusters == 0) clusters = 1;
  Rng rng = make_rng(params.seed, "generate-clustered");
  Instance inst;
  inst.dim = params.dim;
  inst.seed = params.seed;
  inst.hyperplanes = random_hyperplanes(rng, params);
  const Coord inner = std::max<Coord>(0, params.range - spread);
  std::vector<Point> centers;
  for (std::size_t c = 0; c < clusters; ++c) centers.push_back(random_point(rng, params.dim, -inner, inner));
  std::uniform_int_distribution<Coord> jitter(-spread, spread);
  inst.points.reserve(params.points);
  for (std::size_t i = 0; i < params.points; ++i) {
    const Point& center = centers[i % clusters];
    int attempts = 0;
    for (;;) {
      if (++attempts > kMaxResample) {
        throw ResampleExhausted("point " + std::to_string(i) + " kept landing on a hyperplane");
      }
      Point p = center;
      for (auto& c : p.coords) c = std::clamp<Coord>(c + jitter(rng), -params.range, params.range);
      if (!on_any(inst.hyperplanes, p)) {
        inst.points.push_back(std::move(p));
        break;
      }
    }
  }
  return inst;
}

}  // namespace crossmetric
