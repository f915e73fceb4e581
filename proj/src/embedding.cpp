#include "crossmetric/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "crossmetric/error.hpp"
#include "crossmetric/sampling.hpp"

namespace crossmetric {

Rational separation_probability(const Rational& rho, unsigned k) {
  if (rho < 0 || rho > 1) throw Error("separation probability needs rho in [0, 1]");
  if (k == 0) throw Error("separation probability needs k >= 1");
  Rational keep = 1 - rho;
  Rational power = 1;
  for (unsigned e = k; e > 0; e >>= 1) {
    if (e & 1u) power *= keep;
    keep *= keep;
  }
  return 1 - power;
}

double separation_probability(double rho, unsigned k) {
  if (!(rho >= 0 && rho <= 1)) throw Error("separation probability needs rho in [0, 1]");
  if (k == 0) throw Error("separation probability needs k >= 1");
  return -std::expm1(static_cast<double>(k) * std::log1p(-rho));
}

EmbeddingSpec plan_embedding(std::size_t n, std::size_t m, std::uint32_t r, double eps, const EmbeddingConfig& cfg,
                             bool require_gap) {
  if (m == 0 || r < 1 || r > m) throw Error("embedding threshold must satisfy 1 <= r <= m");
  if (!(eps > 0)) throw Error("eps must be positive");
  if (!(cfg.c_embed > 0)) throw Error("c_embed must be positive");
  const double ln = log_n(n);
  EmbeddingSpec s;
  s.n = n;
  s.m = m;
  s.r = r;
  s.eps = eps;
  s.seed = cfg.seed;
  s.alpha = 1.0 / ln;
  s.m_eff = std::max<std::size_t>(m, static_cast<std::size_t>(std::ceil(r * ln)));
  const double meff = static_cast<double>(s.m_eff);
  s.k = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(s.alpha * meff / r)));
  s.z = separation_probability(std::min(1.0, r / meff), static_cast<unsigned>(s.k));
  s.Z = separation_probability(std::min(1.0, (1 + eps) * r / meff), static_cast<unsigned>(s.k));
  s.mu = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(cfg.c_embed * ln / (s.z * s.alpha * s.alpha))));
  s.near_threshold = s.z * (1 + s.alpha) * static_cast<double>(s.mu);
  s.far_threshold = s.Z * (1 - s.alpha) * static_cast<double>(s.mu);
  s.gap_valid = s.Z < 0.5 && s.far_threshold > s.near_threshold;
  s.binary_reps = cfg.binary_reps.value_or(static_cast<std::size_t>(std::ceil(2 * ln)));
  if (s.binary_reps == 0) throw Error("binary_reps must be positive");
  if (require_gap && !s.gap_valid) {
    throw GapDegenerate("no near/far gap at r=" + std::to_string(r) + " (z=" + std::to_string(s.z) +
                        ", Z=" + std::to_string(s.Z) + ")");
  }
  return s;
}

EmbeddingSpec plan_embedding(const Instance& inst, std::uint32_t r, double eps, const EmbeddingConfig& cfg,
                             bool require_gap) {
  return plan_embedding(inst.n(), inst.m(), r, eps, cfg, require_gap);
}

std::vector<LineId> draw_subset(std::size_t m, std::size_t m_eff, std::size_t k, Rng& rng) {
  std::uniform_int_distribution<std::size_t> slot(0, m_eff - 1);
  std::vector<LineId> out;
  out.reserve(k);
  for (std::size_t t = 0; t < k; ++t) {
    const std::size_t s = slot(rng);
    if (s < m) out.push_back(static_cast<LineId>(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EmbeddedPoints embed_points(const CrossingOracle& oracle, const EmbeddingSpec& spec, Exec exec) {
  if (spec.n != oracle.n() || spec.m != oracle.m()) throw Error("embedding spec does not match the instance");
  EmbeddedPoints e;
  e.spec = spec;
  e.subsets.resize(spec.mu);
  for (std::size_t j = 0; j < spec.mu; ++j) {
    Rng rng = make_rng(spec.seed, "subset", j);
    auto& sub = e.subsets[j];
    sub.lines = draw_subset(spec.m, spec.m_eff, spec.k, rng);
    sub.weights.resize(sub.lines.size());
    for (auto& w : sub.weights) w = rng();
  }
  e.labels = kernels::subset_labels(oracle.signs(), e.subsets, exec);
  Rng mask_rng = make_rng(spec.seed, "binary");
  e.masks.resize(spec.mu * spec.binary_reps);
  for (auto& mk : e.masks) mk = mask_rng();
  e.binary = kernels::binary_expand(e.labels, spec.n, spec.mu, e.masks, spec.binary_reps, exec);
  return e;
}

std::size_t label_hamming(const EmbeddedPoints& e, PointId p, PointId q) {
  const auto a = e.label_row(p);
  const auto b = e.label_row(q);
  std::size_t d = 0;
  for (std::size_t j = 0; j < a.size(); ++j) d += a[j] != b[j];
  return d;
}

PairClass classify_pair(const EmbeddedPoints& e, PointId p, PointId q) {
  const double x = static_cast<double>(label_hamming(e, p, q));
  if (x <= e.spec.near_threshold) return PairClass::Near;
  if (x >= e.spec.far_threshold) return PairClass::Far;
  return PairClass::Indeterminate;
}

SoundnessReport verify_label_soundness(const CrossingOracle& oracle, const EmbeddedPoints& e) {
  SoundnessReport rep;
  const std::size_t n = e.n();
  for (std::size_t j = 0; j < e.mu(); ++j) {
    const auto& lines = e.subsets[j].lines;
    std::map<std::uint64_t, BitVector> by_label;
    std::map<std::vector<std::uint64_t>, std::uint64_t> by_pattern;
    for (PointId p = 0; p < n; ++p) {
      BitVector pattern = oracle.pattern(p, lines);
      const std::uint64_t lab = e.label(p, j);
      auto [it, fresh] = by_label.emplace(lab, pattern);
      if (!fresh && !(it->second == pattern)) ++rep.collisions;
      std::vector<std::uint64_t> key(pattern.words().begin(), pattern.words().end());
      auto [pt, pfresh] = by_pattern.emplace(std::move(key), lab);
      if (!pfresh && pt->second != lab) ++rep.splits;
    }
    ++rep.coordinates;
  }
  return rep;
}

}  // namespace crossmetric
