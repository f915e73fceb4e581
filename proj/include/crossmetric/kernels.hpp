#pragma once

// Data-parallel inner loops. Each kernel has a serial reference path and an
// OpenMP path; both must produce bit-identical output for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crossmetric/bits.hpp"
#include "crossmetric/geometry.hpp"

namespace crossmetric {

enum class Exec { Serial, Parallel };

namespace kernels {

/// n × m matrix of sign bits (row p = sign vector of point p). Throws
/// OnHyperplane if any point lies on any hyperplane.
BitMatrix sign_matrix(const Instance& inst, Exec exec);

/// Position of pair (i, j), i < j, in the condensed upper-triangle layout.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

/// All C(n,2) row Hamming distances in condensed layout.
std::vector<std::uint32_t> pair_distances(const BitMatrix& signs, Exec exec);

/// One hashed subset: distinct line ids with their random 64-bit weights.
struct WeightedSubset {
  std::vector<LineId> lines;
  std::vector<std::uint64_t> weights;
};

/// labels[p * mu + j] = Σ_t weights_j[t] · [p on positive side of lines_j[t]],
/// in wraparound 64-bit arithmetic (mu = subsets.size()).
std::vector<std::uint64_t> subset_labels(const BitMatrix& signs, std::span<const WeightedSubset> subsets, Exec exec);

/// Binary code for every point: bit j*reps + t = parity(label_j & masks[j*reps + t]).
BitMatrix binary_expand(std::span<const std::uint64_t> labels, std::size_t n, std::size_t mu,
                        std::span<const std::uint64_t> masks, std::size_t reps, Exec exec);

}  // namespace kernels
}  // namespace crossmetric
