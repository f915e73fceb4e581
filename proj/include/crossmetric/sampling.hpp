#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crossmetric/bits.hpp"
#include "crossmetric/geometry.hpp"
#include "crossmetric/oracle.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

/// Knobs of the sampling pipeline. All logarithms are natural.
struct SamplingConfig {
  double eps = 0.5;
  /// Sampling rate numerator: nu = min(1, c_samp·ln n / (l·eps²)).
  double c_samp = 4.0;
  /// Initial scale divisor: l0 = max(eps·M / (c_short·n·alpha_fn·ln² n), 1).
  double c_short = 1.0;
  /// Propagation depth: min(ceil(c_prop·ln n / eps²), ceil(l)).
  double c_prop = 4.0;
  /// Estimator budget and additive term multiplier.
  double c_est = 2.0;
  /// Stand-in for the inverse Ackermann function.
  double alpha_fn = 3.0;
  /// Samples per rate in the rough estimator; default ceil(2·log2 n).
  std::optional<std::size_t> est_repeats;
  std::uint64_t seed = 0;

  /// Throws Error unless eps is in (0,1] and every constant is positive.
  void validate() const;
  std::size_t repeats(std::size_t n) const;
};

/// ln(max(n, 2)), so formulas stay finite for tiny inputs.
double log_n(std::size_t n);

double sampling_probability(const SamplingConfig& cfg, std::size_t n, double l);
int propagation_depth(const SamplingConfig& cfg, std::size_t n, double l);

/// A Bernoulli sample R of the lines at distance scale l.
struct SamplePlan {
  double l = 1;
  double eps = 0.5;
  double nu = 1;   // inclusion probability per line
  double rho = 1;  // nu·l, expected sampled distance of a pair at distance l
  std::vector<LineId> lines;
  BitVector mask;  // lines as a bit mask over all m ids
};

/// Draws each line independently with probability nu(l). The stream is
/// derive_seed(cfg.seed, "sample", stream).
SamplePlan make_sample(std::size_t m, std::size_t n, const SamplingConfig& cfg, double l, std::uint64_t stream = 0);
SamplePlan make_sample(const Instance& inst, const SamplingConfig& cfg, double l, std::uint64_t stream = 0);

/// Bernoulli(p) subset of {0..m-1}.
std::vector<LineId> bernoulli_lines(std::size_t m, double p, Rng& rng);

/// D_R(p,q) / (nu·(1 - eps/4)).
double scaled_distance_estimate(const SamplePlan& plan, const CrossingOracle& oracle, PointId p, PointId q);

}  // namespace crossmetric
