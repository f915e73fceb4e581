#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "crossmetric/bits.hpp"
#include "crossmetric/geometry.hpp"
#include "crossmetric/kernels.hpp"

namespace crossmetric {

/// Bit mask over hyperplane ids marking a subset R ⊆ L.
BitVector line_mask(std::size_t m, std::span<const LineId> lines);

/// Precomputed sign vectors of every point of an instance. Distances are
/// Hamming distances of sign rows, optionally restricted to a line subset.
class CrossingOracle {
 public:
  explicit CrossingOracle(const Instance& inst, Exec exec = Exec::Parallel);

  const Instance& instance() const { return *inst_; }
  const BitMatrix& signs() const { return signs_; }
  std::size_t n() const { return signs_.rows(); }
  std::size_t m() const { return signs_.cols(); }

  bool positive(PointId p, LineId line) const { return signs_.get(p, line); }

  std::uint32_t distance(PointId a, PointId b) const {
    return static_cast<std::uint32_t>(signs_.row_hamming(a, b));
  }

  /// Crossing distance counting only lines set in `mask` (see line_mask).
  std::uint32_t distance(PointId a, PointId b, const BitVector& mask) const {
    return static_cast<std::uint32_t>(masked_hamming(signs_.row(a), signs_.row(b), mask.words()));
  }

  /// Sign pattern of p over `lines`, bit t for lines[t].
  BitVector pattern(PointId p, std::span<const LineId> lines) const;

 private:
  const Instance* inst_;
  BitMatrix signs_;
};

}  // namespace crossmetric
