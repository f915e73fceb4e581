#include "crossmetric/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

void SamplingConfig::validate() const {
  if (!(eps > 0 && eps <= 1)) throw Error("eps must lie in (0, 1]");
  if (!(c_samp > 0 && c_short > 0 && c_prop > 0 && c_est > 0 && alpha_fn > 0)) {
    throw Error("sampling constants must be positive");
  }
  if (est_repeats && *est_repeats == 0) throw Error("est_repeats must be positive");
}

std::size_t SamplingConfig::repeats(std::size_t n) const {
  if (est_repeats) return *est_repeats;
  return static_cast<std::size_t>(std::ceil(2.0 * std::log2(static_cast<double>(std::max<std::size_t>(n, 2)))));
}

double log_n(std::size_t n) { return std::log(static_cast<double>(std::max<std::size_t>(n, 2))); }

double sampling_probability(const SamplingConfig& cfg, std::size_t n, double l) {
  if (!(l >= 1)) throw Error("distance scale must be at least 1");
  return std::min(1.0, cfg.c_samp * log_n(n) / (l * cfg.eps * cfg.eps));
}

int propagation_depth(const SamplingConfig& cfg, std::size_t n, double l) {
  const double depth = std::min(std::ceil(cfg.c_prop * log_n(n) / (cfg.eps * cfg.eps)), std::ceil(l));
  return static_cast<int>(std::max(depth, 1.0));
}

std::vector<LineId> bernoulli_lines(std::size_t m, double p, Rng& rng) {
  std::vector<LineId> out;
  if (p >= 1) {
    out.resize(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<LineId>(i);
    return out;
  }
  std::bernoulli_distribution coin(std::max(p, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    if (coin(rng)) out.push_back(static_cast<LineId>(i));
  }
  return out;
}

SamplePlan make_sample(std::size_t m, std::size_t n, const SamplingConfig& cfg, double l, std::uint64_t stream) {
  cfg.validate();
  SamplePlan plan;
  plan.l = l;
  plan.eps = cfg.eps;
  plan.nu = sampling_probability(cfg, n, l);
  plan.rho = plan.nu * l;
  Rng rng = make_rng(cfg.seed, "sample", stream);
  plan.lines = bernoulli_lines(m, plan.nu, rng);
  plan.mask = line_mask(m, plan.lines);
  return plan;
}

SamplePlan make_sample(const Instance& inst, const SamplingConfig& cfg, double l, std::uint64_t stream) {
  return make_sample(inst.m(), inst.n(), cfg, l, stream);
}

double scaled_distance_estimate(const SamplePlan& plan, const CrossingOracle& oracle, PointId p, PointId q) {
  return oracle.distance(p, q, plan.mask) / (plan.nu * (1.0 - plan.eps / 4.0));
}

}  // namespace crossmetric
