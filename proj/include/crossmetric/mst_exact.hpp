#pragma once

#include <climits>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "crossmetric/forest.hpp"
#include "crossmetric/geometry.hpp"
#include "crossmetric/kernels.hpp"
#include "crossmetric/oracle.hpp"

namespace crossmetric {

struct MstResult {
  SpanningForest forest;
  std::uint64_t weight = 0;
};

/// Kruskal over all C(n,2) pairs under the full crossing metric; ties broken
/// by (min id, max id). The reference every other MST path is checked against.
MstResult mst_bruteforce(const CrossingOracle& oracle, Exec exec = Exec::Parallel);
MstResult mst_bruteforce(const Instance& inst);

/// Kruskal over all pairs under an arbitrary symmetric weight; same tie rule.
MstResult mst_kruskal(std::size_t n, const std::function<std::uint32_t(PointId, PointId)>& weight);

/// Counters collected while flooding.
struct WavefrontStats {
  std::size_t faces = 0;            // faces of the arrangement
  std::size_t faces_labeled = 0;    // faces reached by the flood
  std::size_t candidates = 0;       // collision candidates discovered
  std::size_t accepted = 0;         // candidates that joined two components
  std::size_t underweight = 0;      // candidates lighter than the true distance (must stay 0)
  std::size_t accepted_inexact = 0; // accepted candidates heavier than the true distance
};

enum class EdgeWeighting {
  Sample,  // record crossing distance under the propagated subset R
  Full,    // record crossing distance under every hyperplane
};

inline constexpr int kUnboundedRadius = INT_MAX;

struct PropagationOptions {
  /// Abort with BudgetExceeded once the flood has labeled more faces.
  std::optional<std::size_t> face_budget;
  EdgeWeighting weighting = EdgeWeighting::Sample;
  WavefrontStats* stats = nullptr;
};

/// Wavefront propagation in Arr(R) from the faces holding points, out to
/// `radius` lines crossed. Fronts of different points that meet across an
/// edge (f, g) yield a candidate of weight dist(f) + dist(g) + crossed; these
/// are applied to F in nondecreasing weight order, rejecting edges inside a
/// component; candidates heavier than 2·radius are dropped. Afterwards every
/// pair within distance 2·radius under R shares a component of F. Returns the
/// edges added. Planar only.
std::vector<ForestEdge> bounded_spanning_forest(const CrossingOracle& oracle, std::span<const LineId> lines,
                                                int radius, SpanningForest& forest,
                                                const PropagationOptions& options = {});

/// Exact MST by flooding the full arrangement (weight equals mst_bruteforce).
MstResult mst_wavefront(const CrossingOracle& oracle, WavefrontStats* stats = nullptr);
MstResult mst_wavefront(const Instance& inst);

}  // namespace crossmetric
