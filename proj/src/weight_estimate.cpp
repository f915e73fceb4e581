#include "crossmetric/weight_estimate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "crossmetric/error.hpp"
#include "crossmetric/mst_exact.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

RoughEstimate estimate_weight_rough(const CrossingOracle& oracle, const SamplingConfig& cfg) {
  cfg.validate();
  const std::size_t n = oracle.n();
  const std::size_t m = oracle.m();
  RoughEstimate out;
  if (n < 2) return out;
  const double ln = log_n(n);
  if (m == 0) {
    out.value = cfg.c_est * n * ln;
    return out;
  }
  const std::size_t repeats = cfg.repeats(n);

  double rate = static_cast<double>(m);
  for (std::size_t i = 0;; ++i, rate /= 2) {
    const double p = rate / static_cast<double>(m);
    std::optional<std::uint64_t> best;
    for (std::size_t j = 0; j < repeats; ++j) {
      Rng rng = make_rng(cfg.seed, "rough", i * repeats + j);
      const auto lines = p < 0.25 / static_cast<double>(m) ? std::vector<LineId>{} : bernoulli_lines(m, p, rng);
      PropagationOptions opts;
      opts.face_budget = static_cast<std::size_t>(std::ceil(cfg.c_est * (lines.size() + n) * ln));
      SpanningForest forest(n);
      ++out.samples_run;
      try {
        bounded_spanning_forest(oracle, lines, kUnboundedRadius, forest, opts);
      } catch (const BudgetExceeded&) {
        ++out.budget_trips;
        continue;
      }
      const std::uint64_t w = forest.total_weight();
      if (!best || w < *best) best = w;
    }
    if (best) {
      out.rate = rate;
      out.rate_index = i;
      out.sample_weight = *best;
      out.value = (static_cast<double>(m) / rate) * (cfg.c_est * n * ln + 2.0 * static_cast<double>(*best));
      return out;
    }
  }
}

}  // namespace crossmetric
