#include "crossmetric/lsh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "crossmetric/bits.hpp"
#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

LshParams LshParams::defaults(std::size_t n, std::size_t code_bits) {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  LshParams p;
  p.bits_per_band = static_cast<std::size_t>(std::ceil(std::log2(nn)));
  p.bits_per_band = std::clamp<std::size_t>(p.bits_per_band, 1, std::max<std::size_t>(1, std::min<std::size_t>(code_bits, 64)));
  p.bands = std::min<std::size_t>(64, static_cast<std::size_t>(std::ceil(std::pow(nn, 0.4))));
  return p;
}

LshIndex::LshIndex(std::size_t code_bits, const LshParams& params, std::uint64_t seed)
    : code_bits_(code_bits), words_(words_for_bits(code_bits)), params_(params) {
  if (code_bits == 0) throw Error("code length must be positive");
  if (params.bands == 0 || params.bits_per_band == 0 || params.bits_per_band > 64 ||
      params.bits_per_band > code_bits) {
    throw Error("invalid LSH parameters");
  }
  positions_.resize(params.bands);
  tables_.resize(params.bands);
  std::vector<std::uint32_t> all(code_bits);
  std::iota(all.begin(), all.end(), 0u);
  for (std::size_t b = 0; b < params.bands; ++b) {
    Rng rng = make_rng(seed, "lsh-band", b);
    // Partial Fisher-Yates: K distinct positions.
    for (std::size_t t = 0; t < params.bits_per_band; ++t) {
      std::uniform_int_distribution<std::size_t> pick(t, code_bits - 1);
      std::swap(all[t], all[pick(rng)]);
    }
    positions_[b].assign(all.begin(), all.begin() + params.bits_per_band);
    std::sort(positions_[b].begin(), positions_[b].end());
  }
}

std::uint64_t LshIndex::band_key(std::size_t band, std::span<const std::uint64_t> code) const {
  std::uint64_t key = 0;
  const auto& pos = positions_[band];
  for (std::size_t t = 0; t < pos.size(); ++t) {
    key |= ((code[pos[t] >> 6] >> (pos[t] & 63)) & 1u) << t;
  }
  return key;
}

void LshIndex::insert(PointId id, std::span<const std::uint64_t> code) {
  if (code.size() != words_) throw Error("code length mismatch");
  auto [it, fresh] = codes_.emplace(id, std::vector<std::uint64_t>(code.begin(), code.end()));
  if (!fresh) throw DuplicateId("point " + std::to_string(id) + " is already indexed");
  for (std::size_t b = 0; b < tables_.size(); ++b) tables_[b][band_key(b, code)].push_back(id);
}

void LshIndex::erase(PointId id) {
  auto it = codes_.find(id);
  if (it == codes_.end()) throw UnknownId("point " + std::to_string(id) + " is not indexed");
  for (std::size_t b = 0; b < tables_.size(); ++b) {
    const std::uint64_t key = band_key(b, it->second);
    auto bucket = tables_[b].find(key);
    auto& ids = bucket->second;
    ids.erase(std::find(ids.begin(), ids.end(), id));
    if (ids.empty()) tables_[b].erase(bucket);
  }
  codes_.erase(it);
}

std::optional<LshHit> LshIndex::query(std::span<const std::uint64_t> code, const Exclude& exclude) const {
  if (code.size() != words_) throw Error("code length mismatch");
  std::optional<LshHit> best;
  auto consider = [&](PointId id, std::span<const std::uint64_t> other) {
    if (exclude && exclude(id)) return;
    const std::size_t d = hamming(code, other);
    if (!best || d < best->distance || (d == best->distance && id < best->id)) best = LshHit{id, d};
  };
  for (std::size_t b = 0; b < tables_.size(); ++b) {
    auto bucket = tables_[b].find(band_key(b, code));
    if (bucket == tables_[b].end()) continue;
    for (PointId id : bucket->second) consider(id, codes_.at(id));
  }
  if (!best) {
    for (const auto& [id, other] : codes_) consider(id, other);
    if (best) best->scanned = true;
  }
  return best;
}

}  // namespace crossmetric
