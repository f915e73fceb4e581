#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "crossmetric/forest.hpp"
#include "crossmetric/oracle.hpp"
#include "crossmetric/sampling.hpp"
#include "crossmetric/weight_estimate.hpp"

namespace crossmetric {

struct StageRecord {
  std::size_t index = 0;
  double l = 0;
  double nu = 1;
  std::size_t sample_size = 0;
  int depth = 0;  // propagation radius; -1 for the unbounded final stage
  bool exact = false;
  std::size_t edges_added = 0;
  std::uint64_t weight_added = 0;  // full crossing weight of the added edges
  std::size_t components = 0;      // after the stage
};

/// Samples R at scale l and propagates in Arr(R) to depth
/// propagation_depth(l); edges carry their full crossing distance.
StageRecord propagate_approx_wavefront(const CrossingOracle& oracle, const SamplingConfig& cfg, double l,
                                       SpanningForest& forest, std::uint64_t stream = 0);

struct ApproxResult {
  SpanningForest forest;
  std::uint64_t weight = 0;
  RoughEstimate estimate;
  double l0 = 1;
  std::vector<StageRecord> stages;
};

using StageObserver = std::function<void(const StageRecord&)>;

/// Staged sampling MST: l0 from the rough estimate, then stages with doubling
/// scale until F spans; once the scale exceeds m a final stage runs exactly on
/// all lines. Always returns a spanning tree. Planar only.
ApproxResult approx_mst(const CrossingOracle& oracle, const SamplingConfig& cfg, const StageObserver& observer = {});

}  // namespace crossmetric
