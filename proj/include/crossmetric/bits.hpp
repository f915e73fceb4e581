#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace crossmetric {

inline constexpr std::size_t words_for_bits(std::size_t bits) { return (bits + 63) / 64; }

/// Hamming distance between two equally sized word spans.
inline std::size_t hamming(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

/// Hamming distance restricted to the bits set in `mask`.
inline std::size_t masked_hamming(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                                  std::span<const std::uint64_t> mask) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount((a[i] ^ b[i]) & mask[i]);
  return d;
}

/// Fixed-length bit array. Bit i lives in word i/64 at position i%64; padding bits are zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : size_(bits), words_(words_for_bits(bits), 0) {}

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  std::size_t popcount() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline std::size_t hamming(const BitVector& a, const BitVector& b) { return hamming(a.words(), b.words()); }

/// Lexicographic order over bit sequences read from index 0, with 0 < 1.
bool lexicographic_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// Row-major bit matrix; each row padded to whole 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for_bits(cols)), words_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  std::span<const std::uint64_t> row(std::size_t r) const { return {words_.data() + r * stride_, stride_}; }
  std::span<std::uint64_t> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }

  bool get(std::size_t r, std::size_t c) const { return (words_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = words_[r * stride_ + (c >> 6)];
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  std::size_t row_hamming(std::size_t a, std::size_t b) const { return hamming(row(a), row(b)); }

  std::span<const std::uint64_t> data() const { return words_; }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace crossmetric
