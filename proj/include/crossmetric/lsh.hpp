#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "crossmetric/geometry.hpp"

namespace crossmetric {

struct LshParams {
  std::size_t bands = 1;          // G
  std::size_t bits_per_band = 1;  // K

  /// K = ceil(log2 n), G = min(64, ceil(n^0.4)); K capped by the code length.
  static LshParams defaults(std::size_t n, std::size_t code_bits);
};

struct LshHit {
  PointId id = 0;
  std::size_t distance = 0;
  bool scanned = false;  // found by the full-scan fallback
};

/// Dynamic bit-sampling LSH over fixed-length binary codes. Each band hashes
/// a code by K sampled bit positions; a query collects the live points that
/// collide with it in any band and returns the closest. If no collision
/// survives the exclusion filter it scans every live point instead.
class LshIndex {
 public:
  using Exclude = std::function<bool(PointId)>;

  LshIndex(std::size_t code_bits, const LshParams& params, std::uint64_t seed);

  std::size_t code_bits() const { return code_bits_; }
  const LshParams& params() const { return params_; }
  std::size_t size() const { return codes_.size(); }
  bool contains(PointId id) const { return codes_.count(id) != 0; }

  /// Throws DuplicateId if id is live.
  void insert(PointId id, std::span<const std::uint64_t> code);
  /// Throws UnknownId if id is not live.
  void erase(PointId id);

  /// Nearest live, non-excluded point among collisions (ties to the smaller
  /// id), falling back to a full scan. nullopt if every live point is excluded.
  std::optional<LshHit> query(std::span<const std::uint64_t> code, const Exclude& exclude = {}) const;

 private:
  std::uint64_t band_key(std::size_t band, std::span<const std::uint64_t> code) const;

  std::size_t code_bits_;
  std::size_t words_;
  LshParams params_;
  std::vector<std::vector<std::uint32_t>> positions_;  // per band, sorted
  std::vector<std::unordered_map<std::uint64_t, std::vector<PointId>>> tables_;
  std::map<PointId, std::vector<std::uint64_t>> codes_;
};

}  // namespace crossmetric
