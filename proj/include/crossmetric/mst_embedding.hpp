#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "crossmetric/embedding.hpp"
#include "crossmetric/forest.hpp"
#include "crossmetric/lsh.hpp"
#include "crossmetric/oracle.hpp"

namespace crossmetric {

struct AnnMstConfig {
  EmbeddingConfig embedding;
  /// Band parameters; LshParams::defaults per rung when unset.
  std::optional<LshParams> lsh;
  /// Skip rungs whose parameters leave no near/far gap. The top rung is kept
  /// regardless so every round can make progress.
  bool require_gap = false;
  std::uint64_t seed = 0;
};

struct LadderRung {
  std::uint32_t r = 1;
  std::size_t mu = 0;
  std::size_t k = 0;
  bool gap_valid = false;
  double near_threshold = 0;
  double far_threshold = 0;
};

struct RoundRecord {
  std::size_t index = 0;
  std::size_t components_before = 0;
  std::size_t edges_added = 0;
  std::size_t scans = 0;     // queries answered by the full-scan fallback
  bool exact_fallback = false;
};

struct AnnMstResult {
  SpanningForest forest;
  std::uint64_t weight = 0;
  std::vector<LadderRung> ladder;
  std::vector<RoundRecord> rounds;
  /// max r_{t+1}/r_t - 1 over the ladder: the ratio bound if every rung
  /// classified perfectly.
  double eps_effective = 0;
  /// min far/near threshold ratio over rungs with a valid gap (0 if none).
  double min_gap_ratio = 0;
};

using RoundObserver = std::function<void(const RoundRecord&)>;

/// Borůvka over a ladder of threshold embeddings r_t = ceil((1+eps)^t) ≤ m,
/// each with its own LSH index over the binary codes. Each point scans the
/// ladder upward and takes the first rung whose nearest foreign neighbour
/// passes the rung's near test; each component keeps its lightest find by
/// true crossing distance. A round that adds nothing falls back to exact
/// lightest outgoing edges. Works in any dimension.
AnnMstResult mst_via_embedding(const CrossingOracle& oracle, double eps, const AnnMstConfig& cfg,
                               const RoundObserver& observer = {});

/// r_t = ceil((1+eps)^t) for t = 0 .. ceil(log_{1+eps} m), clamped to m, deduplicated.
std::vector<std::uint32_t> threshold_ladder(std::size_t m, double eps);

}  // namespace crossmetric
