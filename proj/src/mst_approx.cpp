#include "crossmetric/mst_approx.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "crossmetric/mst_exact.hpp"

namespace crossmetric {

namespace {

StageRecord run_stage(const CrossingOracle& oracle, std::span<const LineId> lines, int radius, SpanningForest& forest) {
  StageRecord rec;
  rec.sample_size = lines.size();
  rec.depth = radius == kUnboundedRadius ? -1 : radius;
  PropagationOptions opts;
  opts.weighting = EdgeWeighting::Full;
  const auto added = bounded_spanning_forest(oracle, lines, radius, forest, opts);
  rec.edges_added = added.size();
  for (const auto& e : added) rec.weight_added += e.weight;
  rec.components = forest.component_count();
  return rec;
}

}  // namespace

StageRecord propagate_approx_wavefront(const CrossingOracle& oracle, const SamplingConfig& cfg, double l,
                                       SpanningForest& forest, std::uint64_t stream) {
  const SamplePlan plan = make_sample(oracle.m(), oracle.n(), cfg, l, stream);
  const int depth = propagation_depth(cfg, oracle.n(), l);
  StageRecord rec = run_stage(oracle, plan.lines, depth, forest);
  rec.l = l;
  rec.nu = plan.nu;
  return rec;
}

ApproxResult approx_mst(const CrossingOracle& oracle, const SamplingConfig& cfg, const StageObserver& observer) {
  cfg.validate();
  const std::size_t n = oracle.n();
  const std::size_t m = oracle.m();
  ApproxResult out{SpanningForest(n), 0, {}, 1, {}};
  if (n <= 1) return out;

  out.estimate = estimate_weight_rough(oracle, cfg);
  const double ln = log_n(n);
  out.l0 = std::max(cfg.eps * out.estimate.value / (cfg.c_short * n * cfg.alpha_fn * ln * ln), 1.0);

  double l = out.l0;
  for (std::size_t stage = 0; !out.forest.spanning(); ++stage, l *= 2) {
    StageRecord rec;
    if (l > static_cast<double>(m)) {
      std::vector<LineId> all(m);
      std::iota(all.begin(), all.end(), LineId{0});
      rec = run_stage(oracle, all, kUnboundedRadius, out.forest);
      rec.l = l;
      rec.exact = true;
    } else {
      rec = propagate_approx_wavefront(oracle, cfg, l, out.forest, stage);
    }
    rec.index = stage;
    out.stages.push_back(rec);
    if (observer) observer(rec);
    if (rec.exact) break;
  }
  out.weight = out.forest.total_weight();
  return out;
}

}  // namespace crossmetric
