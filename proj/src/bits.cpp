#include "crossmetric/bits.hpp"

namespace crossmetric {

std::size_t BitVector::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool lexicographic_less(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t diff = a[i] ^ b[i];
    if (diff != 0) {
      const std::uint64_t lowest = diff & (~diff + 1);
      return (b[i] & lowest) != 0;
    }
  }
  return false;
}

}  // namespace crossmetric
