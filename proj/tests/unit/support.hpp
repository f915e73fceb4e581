#pragma once

// Helpers and independent oracles shared by the unit tests. Nothing here
// calls into the library's distance or MST code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <set>
#include <vector>

#include "crossmetric/geometry.hpp"

namespace testing_support {

using crossmetric::Coord;
using crossmetric::Hyperplane;
using crossmetric::Instance;
using crossmetric::Point;

inline Point pt(Coord x, Coord y) { return Point{{x, y}}; }

/// a·x + b·y + c = 0
inline Hyperplane line(Coord a, Coord b, Coord c) { return Hyperplane{{a, b}, c}; }

inline Instance planar(std::vector<Point> points, std::vector<Hyperplane> lines) {
  Instance inst;
  inst.dim = 2;
  inst.points = std::move(points);
  inst.hyperplanes = std::move(lines);
  return inst;
}

inline Instance random_instance(std::size_t n, std::size_t m, std::uint64_t seed, Coord range = 1000,
                                std::size_t dim = 2) {
  crossmetric::GenerateParams g;
  g.dim = dim;
  g.points = n;
  g.hyperplanes = m;
  g.range = range;
  g.seed = seed;
  return crossmetric::generate_instance(g);
}

/// Separating-hyperplane count by direct substitution in 128-bit arithmetic.
inline std::uint32_t separating(const std::vector<Hyperplane>& hs, const Point& p, const Point& q,
                                const std::vector<std::uint32_t>* subset = nullptr) {
  auto eval = [](const Hyperplane& h, const Point& x) {
    __int128 s = h.offset;
    for (std::size_t i = 0; i < x.coords.size(); ++i) s += static_cast<__int128>(h.normal[i]) * x.coords[i];
    return s;
  };
  std::uint32_t count = 0;
  auto check = [&](const Hyperplane& h) { count += (eval(h, p) > 0) != (eval(h, q) > 0); };
  if (subset) {
    for (auto i : *subset) check(hs[i]);
  } else {
    for (const auto& h : hs) check(h);
  }
  return count;
}

/// Prim's algorithm on a dense weight function; O(n²) and independent of any
/// union-find.
template <class Weight>
std::uint64_t prim_weight(std::size_t n, Weight w) {
  if (n <= 1) return 0;
  std::vector<std::uint64_t> key(n, std::numeric_limits<std::uint64_t>::max());
  std::vector<bool> in(n, false);
  key[0] = 0;
  std::uint64_t total = 0;
  for (std::size_t it = 0; it < n; ++it) {
    std::size_t u = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v] && (u == n || key[v] < key[u])) u = v;
    }
    in[u] = true;
    total += key[u];
    for (std::size_t v = 0; v < n; ++v) {
      if (!in[v]) key[v] = std::min<std::uint64_t>(key[v], w(u, v));
    }
  }
  return total;
}

/// Checks acyclicity and connectivity with a plain DFS over an adjacency list.
template <class Edges>
bool dfs_spanning_tree(std::size_t n, const Edges& edges) {
  if (n == 0) return edges.empty();
  if (edges.size() != n - 1) return false;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : edges) {
    if (e.a >= n || e.b >= n || e.a == e.b) return false;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

/// Distinct sign patterns of a line set seen at probe points: a grid, plus
/// points just off both sides of every edge of the arrangement (midpoints of
/// consecutive crossings along each line, and beyond the outermost ones).
inline std::size_t probed_face_count(const std::vector<Hyperplane>& lines, Coord half_width, Coord step) {
  using Real = long double;
  std::set<std::vector<int>> patterns;
  auto probe = [&](Real x, Real y) {
    std::vector<int> sig;
    for (const auto& h : lines) {
      const Real v = h.normal[0] * x + h.normal[1] * y + h.offset;
      if (v == 0) return;
      sig.push_back(v > 0);
    }
    patterns.insert(sig);
  };
  for (Coord x = -half_width; x <= half_width; x += step) {
    for (Coord y = -half_width; y <= half_width; y += step) probe(x + 0.37L, y + 0.61L);
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Real a = lines[i].normal[0], b = lines[i].normal[1], c = lines[i].offset;
    const Real nn = a * a + b * b;
    const Real x0 = -a * c / nn, y0 = -b * c / nn;  // foot of the origin
    const Real dx = -b, dy = a;                     // direction
    std::vector<Real> ts;
    for (std::size_t j = 0; j < lines.size(); ++j) {
      const Real a2 = lines[j].normal[0], b2 = lines[j].normal[1], c2 = lines[j].offset;
      const Real den = a2 * dx + b2 * dy;
      if (den == 0) continue;
      ts.push_back(-(a2 * x0 + b2 * y0 + c2) / den);
    }
    std::sort(ts.begin(), ts.end());
    std::vector<Real> samples;
    if (ts.empty()) {
      samples.push_back(0);
    } else {
      samples.push_back(ts.front() - 1);
      samples.push_back(ts.back() + 1);
      for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        if (ts[k + 1] - ts[k] > 1e-12L) samples.push_back((ts[k] + ts[k + 1]) / 2);
      }
    }
    const Real len = std::sqrt(nn);
    for (Real t : samples) {
      const Real x = x0 + t * dx, y = y0 + t * dy;
      for (Real side : {-1e-7L, 1e-7L}) probe(x + side * a / len, y + side * b / len);
    }
  }
  return patterns.size();
}

}  // namespace testing_support
