#include "crossmetric/mst_embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

std::vector<std::uint32_t> threshold_ladder(std::size_t m, double eps) {
  if (!(eps > 0)) throw Error("eps must be positive");
  std::vector<std::uint32_t> out;
  if (m == 0) return out;
  const auto top = static_cast<std::size_t>(std::ceil(std::log(static_cast<double>(m)) / std::log1p(eps)));
  for (std::size_t t = 0; t <= top; ++t) {
    const double r = std::ceil(std::pow(1 + eps, static_cast<double>(t)) - 1e-9);
    const auto ri = static_cast<std::uint32_t>(std::min<double>(r, static_cast<double>(m)));
    if (out.empty() || out.back() != ri) out.push_back(ri);
  }
  if (out.back() != m) out.push_back(static_cast<std::uint32_t>(m));
  return out;
}

namespace {

struct Rung {
  LadderRung info;
  EmbeddedPoints points;
  LshIndex index;
};

struct Candidate {
  std::uint32_t w = std::numeric_limits<std::uint32_t>::max();
  PointId a = 0, b = 0;

  bool operator<(const Candidate& o) const { return std::tie(w, a, b) < std::tie(o.w, o.a, o.b); }
};

Candidate make_candidate(const CrossingOracle& oracle, PointId p, PointId q) {
  return {oracle.distance(p, q), std::min(p, q), std::max(p, q)};
}

}  // namespace

AnnMstResult mst_via_embedding(const CrossingOracle& oracle, double eps, const AnnMstConfig& cfg,
                               const RoundObserver& observer) {
  const std::size_t n = oracle.n();
  const std::size_t m = oracle.m();
  AnnMstResult out{SpanningForest(n), 0, {}, {}, 0, 0};
  if (n <= 1) return out;
  if (m == 0) {
    for (PointId p = 1; p < n; ++p) out.forest.add_edge(0, p, 0);
    return out;
  }

  const auto radii = threshold_ladder(m, eps);
  std::vector<Rung> rungs;
  for (std::size_t t = 0; t < radii.size(); ++t) {
    EmbeddingConfig ecfg = cfg.embedding;
    ecfg.seed = derive_seed(cfg.seed, "rung", t);
    const EmbeddingSpec spec = plan_embedding(n, m, radii[t], eps, ecfg, false);
    if (cfg.require_gap && !spec.gap_valid && t + 1 < radii.size()) continue;
    EmbeddedPoints pts = embed_points(oracle, spec);
    const std::size_t bits = pts.binary.cols();
    LshIndex index(bits, cfg.lsh.value_or(LshParams::defaults(n, bits)), derive_seed(cfg.seed, "rung-lsh", t));
    for (PointId p = 0; p < n; ++p) index.insert(p, pts.binary.row(p));
    LadderRung info{spec.r, spec.mu, spec.k, spec.gap_valid, spec.near_threshold, spec.far_threshold};
    out.ladder.push_back(info);
    rungs.push_back(Rung{info, std::move(pts), std::move(index)});
  }
  for (std::size_t t = 0; t + 1 < out.ladder.size(); ++t) {
    out.eps_effective =
        std::max(out.eps_effective, static_cast<double>(out.ladder[t + 1].r) / out.ladder[t].r - 1.0);
  }
  for (const auto& r : out.ladder) {
    if (!r.gap_valid) continue;
    const double ratio = r.far_threshold / r.near_threshold;
    if (out.min_gap_ratio == 0 || ratio < out.min_gap_ratio) out.min_gap_ratio = ratio;
  }

  for (std::size_t round = 0; !out.forest.spanning(); ++round) {
    RoundRecord rec;
    rec.index = round;
    rec.components_before = out.forest.component_count();
    std::vector<Candidate> best(n);  // indexed by component root
    for (PointId p = 0; p < n; ++p) {
      const PointId root = out.forest.find(p);
      auto same_component = [&](PointId q) { return out.forest.find(q) == root; };
      for (const auto& rung : rungs) {
        const auto hit = rung.index.query(rung.points.binary.row(p), same_component);
        if (!hit) break;
        rec.scans += hit->scanned;
        if (static_cast<double>(label_hamming(rung.points, p, hit->id)) > rung.info.near_threshold) continue;
        const Candidate c = make_candidate(oracle, p, hit->id);
        if (c < best[root]) best[root] = c;
        break;
      }
    }
    std::vector<Candidate> picks;
    for (PointId p = 0; p < n; ++p) {
      if (out.forest.find(p) == p && best[p].w != std::numeric_limits<std::uint32_t>::max()) picks.push_back(best[p]);
    }
    std::sort(picks.begin(), picks.end());
    for (const auto& c : picks) rec.edges_added += out.forest.add_edge(c.a, c.b, c.w);

    if (rec.edges_added == 0) {
      // Exact lightest outgoing edge of every component.
      rec.exact_fallback = true;
      std::fill(best.begin(), best.end(), Candidate{});
      for (PointId p = 0; p < n; ++p) {
        for (PointId q = p + 1; q < n; ++q) {
          const PointId rp = out.forest.find(p), rq = out.forest.find(q);
          if (rp == rq) continue;
          const Candidate c = make_candidate(oracle, p, q);
          if (c < best[rp]) best[rp] = c;
          if (c < best[rq]) best[rq] = c;
        }
      }
      picks.clear();
      for (PointId p = 0; p < n; ++p) {
        if (out.forest.find(p) == p && best[p].w != std::numeric_limits<std::uint32_t>::max()) picks.push_back(best[p]);
      }
      std::sort(picks.begin(), picks.end());
      for (const auto& c : picks) rec.edges_added += out.forest.add_edge(c.a, c.b, c.w);
    }
    out.rounds.push_back(rec);
    if (observer) observer(rec);
  }
  out.weight = out.forest.total_weight();
  return out;
}

}  // namespace crossmetric
