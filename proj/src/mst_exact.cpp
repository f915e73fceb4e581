#include "crossmetric/mst_exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

#include "crossmetric/arrangement.hpp"
#include "crossmetric/error.hpp"

namespace crossmetric {

MstResult mst_bruteforce(const CrossingOracle& oracle, Exec exec) {
  const std::size_t n = oracle.n();
  const auto dist = kernels::pair_distances(oracle.signs(), exec);
  // Counting sort by weight; pairs enter each bucket in (i, j) order.
  std::vector<std::size_t> count(oracle.m() + 2, 0);
  for (auto w : dist) ++count[w + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<std::pair<PointId, PointId>> order(dist.size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      order[count[dist[kernels::pair_index(n, i, j)]]++] = {static_cast<PointId>(i), static_cast<PointId>(j)};
    }
  }
  MstResult out{SpanningForest(n), 0};
  for (auto [a, b] : order) {
    if (out.forest.spanning()) break;
    out.forest.add_edge(a, b, dist[kernels::pair_index(n, a, b)]);
  }
  out.weight = out.forest.total_weight();
  return out;
}

MstResult mst_bruteforce(const Instance& inst) { return mst_bruteforce(CrossingOracle(inst)); }

MstResult mst_kruskal(std::size_t n, const std::function<std::uint32_t(PointId, PointId)>& weight) {
  struct Pair {
    std::uint32_t w;
    PointId a, b;
  };
  std::vector<Pair> pairs;
  pairs.reserve(n < 2 ? 0 : n * (n - 1) / 2);
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) pairs.push_back({weight(i, j), i, j});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const Pair& x, const Pair& y) { return std::tie(x.w, x.a, x.b) < std::tie(y.w, y.a, y.b); });
  MstResult out{SpanningForest(n), 0};
  for (const auto& p : pairs) {
    if (out.forest.spanning()) break;
    out.forest.add_edge(p.a, p.b, p.w);
  }
  out.weight = out.forest.total_weight();
  return out;
}

std::vector<ForestEdge> bounded_spanning_forest(const CrossingOracle& oracle, std::span<const LineId> lines,
                                                int radius, SpanningForest& forest,
                                                const PropagationOptions& options) {
  std::vector<ForestEdge> added;
  if (forest.spanning()) return added;
  const Instance& inst = oracle.instance();
  if (inst.dim != 2) throw DimensionUnsupported("wavefront propagation needs a planar instance");
  if (radius < 0) throw Error("propagation radius must be nonnegative");

  const Arrangement arr = build_arrangement(inst, lines);
  const BitVector sample_mask = line_mask(oracle.m(), arr.lines());
  const bool fresh = forest.edges().empty() && radius == kUnboundedRadius;

  auto true_distance = [&](PointId a, PointId b) { return oracle.distance(a, b, sample_mask); };
  auto recorded = [&](PointId a, PointId b) {
    return options.weighting == EdgeWeighting::Full ? oracle.distance(a, b) : true_distance(a, b);
  };

  WavefrontStats local;
  WavefrontStats& stats = options.stats ? *options.stats : local;
  stats.faces += arr.face_count();

  // pending[w] holds candidates of weight w not yet applied.
  std::vector<std::vector<std::pair<PointId, PointId>>> pending;
  auto push = [&](std::uint32_t w, PointId a, PointId b) {
    if (a > b) std::swap(a, b);
    if (pending.size() <= w) pending.resize(w + 1);
    pending[w].emplace_back(a, b);
    ++stats.candidates;
  };
  std::size_t next_class = 0;
  auto apply_through = [&](std::size_t limit) {
    for (; next_class <= limit && next_class < pending.size(); ++next_class) {
      auto& cls = pending[next_class];
      std::sort(cls.begin(), cls.end());
      for (auto [a, b] : cls) {
        if (forest.spanning()) return;
        const std::uint32_t exact = true_distance(a, b);
        if (exact > next_class) ++stats.underweight;
        const std::uint32_t w = recorded(a, b);
        if (forest.add_edge(a, b, w)) {
          added.push_back({a, b, w});
          ++stats.accepted;
          if (exact != next_class) ++stats.accepted_inexact;
        }
      }
      cls.clear();
      cls.shrink_to_fit();
    }
  };

  // Seed each occupied face with its smallest point; co-located points join
  // through weight-0 candidates.
  std::vector<PointId> owner(arr.face_count(), static_cast<PointId>(kNoFace));
  std::vector<FloodSeed> seeds;
  for (PointId p = 0; p < oracle.n(); ++p) {
    const auto face = arr.find_face(oracle.pattern(p, arr.lines()));
    if (!face) throw Error("internal: point " + std::to_string(p) + " has no face");
    if (owner[*face] == static_cast<PointId>(kNoFace)) {
      owner[*face] = p;
      seeds.push_back({*face, p});
    } else {
      push(0, owner[*face], p);
    }
  }

  // With a radius cap, both faces of every candidate of weight <= 2·radius
  // lie within the radius; heavier ones are dropped.
  const std::size_t cap = radius == kUnboundedRadius ? SIZE_MAX : 2 * static_cast<std::size_t>(radius);
  Flood flood(arr, seeds);
  while (!forest.spanning() && flood.advance()) {
    const int d = flood.radius();
    if (d > radius) break;
    if (options.face_budget && flood.labeled_count() > *options.face_budget) {
      throw BudgetExceeded("wavefront exceeded its face budget of " + std::to_string(*options.face_budget));
    }
    for (FaceId f : flood.layer()) {
      const std::uint32_t key = flood.label(f).source;
      for (const auto& adj : arr.neighbors(f)) {
        const FaceLabel& g = flood.label(adj.neighbor);
        if (!g.reached() || g.source == key) continue;
        if (g.distance == d && adj.neighbor > f) continue;  // seen from the other side
        push(static_cast<std::uint32_t>(d + static_cast<int>(adj.multiplicity) + g.distance), key, g.source);
      }
    }
    // Every candidate of weight <= d + 1 has now been discovered.
    apply_through(std::min(static_cast<std::size_t>(d) + 1, cap));
  }
  apply_through(std::min(pending.empty() ? 0 : pending.size() - 1, cap));
  stats.faces_labeled += flood.labeled_count();

  if (fresh && stats.accepted_inexact != 0) {
    throw Error("internal: wavefront accepted a candidate heavier than its true distance");
  }
  if (stats.underweight != 0) throw Error("internal: wavefront candidate lighter than its true distance");
  return added;
}

MstResult mst_wavefront(const CrossingOracle& oracle, WavefrontStats* stats) {
  std::vector<LineId> all(oracle.m());
  std::iota(all.begin(), all.end(), LineId{0});
  MstResult out{SpanningForest(oracle.n()), 0};
  PropagationOptions opts;
  opts.stats = stats;
  bounded_spanning_forest(oracle, all, kUnboundedRadius, out.forest, opts);
  out.weight = out.forest.total_weight();
  return out;
}

MstResult mst_wavefront(const Instance& inst) { return mst_wavefront(CrossingOracle(inst)); }

}  // namespace crossmetric
