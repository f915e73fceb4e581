#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crossmetric/bits.hpp"
#include "crossmetric/geometry.hpp"
#include "crossmetric/kernels.hpp"
#include "crossmetric/oracle.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

using Rational = boost::multiprecision::cpp_rational;

/// 1 - (1 - rho)^k, exactly.
Rational separation_probability(const Rational& rho, unsigned k);
double separation_probability(double rho, unsigned k);

struct EmbeddingConfig {
  double c_embed = 1.0;
  /// Bits per label coordinate in the binary code; default ceil(2·ln n).
  std::optional<std::size_t> binary_reps;
  std::uint64_t seed = 0;
};

/// Parameters of one threshold embedding. When m/r < ln n the formulas use
/// m_eff = ceil(r·ln n) lines, the extra ones fictitious: they are drawn like
/// real lines but separate nothing.
struct EmbeddingSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t m_eff = 0;
  std::uint32_t r = 1;
  double eps = 0.5;
  double alpha = 0;  // 1 / ln n
  std::size_t k = 1;   // draws per subset, with replacement
  std::size_t mu = 1;  // number of subsets (label coordinates)
  double z = 0;        // separation probability at distance r
  double Z = 0;        // separation probability at distance (1+eps)·r
  double near_threshold = 0;  // z(1+alpha)·mu
  double far_threshold = 0;   // Z(1-alpha)·mu
  bool gap_valid = false;     // Z < 1/2 and far > near
  std::size_t binary_reps = 1;
  std::uint64_t seed = 0;
};

/// Plans the embedding for threshold r. Throws GapDegenerate when the gap is
/// unusable unless require_gap is false, in which case gap_valid records it.
EmbeddingSpec plan_embedding(std::size_t n, std::size_t m, std::uint32_t r, double eps, const EmbeddingConfig& cfg,
                             bool require_gap = true);
EmbeddingSpec plan_embedding(const Instance& inst, std::uint32_t r, double eps, const EmbeddingConfig& cfg,
                             bool require_gap = true);

/// k uniform draws from m_eff line slots; returns the distinct real lines hit, sorted.
std::vector<LineId> draw_subset(std::size_t m, std::size_t m_eff, std::size_t k, Rng& rng);

struct EmbeddedPoints {
  EmbeddingSpec spec;
  std::vector<kernels::WeightedSubset> subsets;
  std::vector<std::uint64_t> labels;  // n × mu, row-major
  std::vector<std::uint64_t> masks;   // mu × binary_reps hash-to-bit masks
  BitMatrix binary;                   // n × (mu·binary_reps)

  std::size_t n() const { return spec.n; }
  std::size_t mu() const { return spec.mu; }
  std::uint64_t label(PointId p, std::size_t j) const { return labels[std::size_t{p} * spec.mu + j]; }
  std::span<const std::uint64_t> label_row(PointId p) const {
    return {labels.data() + std::size_t{p} * spec.mu, spec.mu};
  }
};

/// Subset j uses stream derive_seed(spec.seed, "subset", j) for its draws and
/// label weights; masks use stream "binary". Output is identical for both
/// execution modes.
EmbeddedPoints embed_points(const CrossingOracle& oracle, const EmbeddingSpec& spec, Exec exec = Exec::Parallel);

/// Number of label coordinates where p and q differ.
std::size_t label_hamming(const EmbeddedPoints& e, PointId p, PointId q);

enum class PairClass { Near, Far, Indeterminate };

PairClass classify_pair(const EmbeddedPoints& e, PointId p, PointId q);

struct SoundnessReport {
  std::size_t coordinates = 0;
  std::size_t collisions = 0;  // equal labels on different sign patterns
  std::size_t splits = 0;      // different labels on equal sign patterns
};

/// Exhaustive check that label equality in each coordinate matches sign
/// pattern equality on that subset.
SoundnessReport verify_label_soundness(const CrossingOracle& oracle, const EmbeddedPoints& e);

}  // namespace crossmetric
