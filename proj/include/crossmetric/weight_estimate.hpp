#pragma once

#include <cstddef>
#include <cstdint>

#include "crossmetric/oracle.hpp"
#include "crossmetric/sampling.hpp"

namespace crossmetric {

struct RoughEstimate {
  double value = 0;          // M, an upper bound on the MST weight w.h.p.
  double rate = 0;           // expected sample size at the accepted rate
  std::size_t rate_index = 0;
  std::uint64_t sample_weight = 0;  // cheapest completed sample MST at that rate
  std::size_t samples_run = 0;
  std::size_t budget_trips = 0;
};

/// Geometric search over sample rates m, m/2, m/4, ...: at each rate,
/// repeats(n) Bernoulli samples are solved with a budgeted wavefront MST
/// (budget ceil(c_est·(|R| + n)·ln n) labeled faces). The first rate where a
/// sample finishes within budget yields
///   M = (m / rate)·(c_est·n·ln n + 2·min W(P, R)).
/// Once the rate drops below 1/4 the sample is empty and always finishes.
/// Planar only.
RoughEstimate estimate_weight_rough(const CrossingOracle& oracle, const SamplingConfig& cfg);

}  // namespace crossmetric
