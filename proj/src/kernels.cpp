#include "crossmetric/kernels.hpp"

#include <atomic>
#include <bit>
#include <string>

#include <omp.h>

#include "crossmetric/error.hpp"

namespace crossmetric::kernels {

namespace {

// Fills row p; returns the id of the first hyperplane containing p, or -1.
long fill_sign_row(const Instance& inst, std::size_t p, BitMatrix& out) {
  const Point& pt = inst.points[p];
  auto row = out.row(p);
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const Wide v = evaluate(inst.hyperplanes[i], pt);
    if (v == 0) return static_cast<long>(i);
    if (v > 0) row[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  return -1;
}

[[noreturn]] void throw_on_hyperplane(std::size_t p, long h) {
  throw OnHyperplane("point " + std::to_string(p) + " lies on hyperplane " + std::to_string(h));
}

std::uint64_t label_of(const BitMatrix& signs, std::size_t p, const WeightedSubset& s) {
  std::uint64_t acc = 0;
  for (std::size_t t = 0; t < s.lines.size(); ++t) {
    if (signs.get(p, s.lines[t])) acc += s.weights[t];
  }
  return acc;
}

void expand_row(std::span<const std::uint64_t> labels, std::size_t p, std::size_t mu,
                std::span<const std::uint64_t> masks, std::size_t reps, BitMatrix& out) {
  auto row = out.row(p);
  for (std::size_t j = 0; j < mu; ++j) {
    const std::uint64_t label = labels[p * mu + j];
    for (std::size_t t = 0; t < reps; ++t) {
      const std::size_t col = j * reps + t;
      if (std::popcount(label & masks[col]) & 1) row[col >> 6] |= std::uint64_t{1} << (col & 63);
    }
  }
}

}  // namespace

BitMatrix sign_matrix(const Instance& inst, Exec exec) {
  BitMatrix out(inst.n(), inst.m());
  const auto n = static_cast<long>(inst.n());
  if (exec == Exec::Serial) {
    for (long p = 0; p < n; ++p) {
      if (long h = fill_sign_row(inst, p, out); h >= 0) throw_on_hyperplane(p, h);
    }
    return out;
  }
  // Smallest failing point wins so the error matches the serial path.
  std::atomic<long> bad_point{n};
  std::atomic<long> bad_plane{-1};
#pragma omp parallel for schedule(static)
  for (long p = 0; p < n; ++p) {
    if (long h = fill_sign_row(inst, p, out); h >= 0) {
#pragma omp critical(crossmetric_sign_error)
      if (p < bad_point.load()) {
        bad_point = p;
        bad_plane = h;
      }
    }
  }
  if (bad_point.load() < n) throw_on_hyperplane(bad_point.load(), bad_plane.load());
  return out;
}

std::vector<std::uint32_t> pair_distances(const BitMatrix& signs, Exec exec) {
  const std::size_t n = signs.rows();
  std::vector<std::uint32_t> out(n < 2 ? 0 : n * (n - 1) / 2);
  const auto rows = static_cast<long>(n);
  if (exec == Exec::Serial) {
    for (long i = 0; i < rows; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out[pair_index(n, i, j)] = signs.row_hamming(i, j);
    }
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out[pair_index(n, i, j)] = signs.row_hamming(i, j);
  }
  return out;
}

std::vector<std::uint64_t> subset_labels(const BitMatrix& signs, std::span<const WeightedSubset> subsets, Exec exec) {
  const std::size_t n = signs.rows();
  const std::size_t mu = subsets.size();
  std::vector<std::uint64_t> labels(n * mu, 0);
  const auto count = static_cast<long>(mu);
  if (exec == Exec::Serial) {
    for (long j = 0; j < count; ++j) {
      for (std::size_t p = 0; p < n; ++p) labels[p * mu + j] = label_of(signs, p, subsets[j]);
    }
    return labels;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long j = 0; j < count; ++j) {
    for (std::size_t p = 0; p < n; ++p) labels[p * mu + j] = label_of(signs, p, subsets[j]);
  }
  return labels;
}

BitMatrix binary_expand(std::span<const std::uint64_t> labels, std::size_t n, std::size_t mu,
                        std::span<const std::uint64_t> masks, std::size_t reps, Exec exec) {
  BitMatrix out(n, mu * reps);
  const auto rows = static_cast<long>(n);
  if (exec == Exec::Serial) {
    for (long p = 0; p < rows; ++p) expand_row(labels, p, mu, masks, reps, out);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (long p = 0; p < rows; ++p) expand_row(labels, p, mu, masks, reps, out);
  return out;
}

}  // namespace crossmetric::kernels
