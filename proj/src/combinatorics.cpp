#include "magic24/combinatorics.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace magic24 {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is always integral at this point
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / num)
      throw std::overflow_error("binomial overflow");
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint32_t next_same_popcount(std::uint32_t mask) {
  if (mask == 0) return 0;
  std::uint32_t lowest = mask & (0u - mask);
  std::uint32_t carry = mask + lowest;
  if (carry == 0) return 0;
  return carry + (((carry ^ mask) / lowest) >> 2);
}

std::uint64_t subset_rank_colex(std::uint32_t mask) {
  std::uint64_t rank = 0;
  int i = 0;
  while (mask != 0) {
    int pos = std::countr_zero(mask);
    mask &= mask - 1;
    rank += binomial(pos, ++i);
  }
  return rank;
}

std::uint32_t subset_unrank_colex(int n, int k, std::uint64_t rank) {
  if (k < 0 || k > n || n > 32) throw std::invalid_argument("subset_unrank_colex: bad n/k");
  if (rank >= binomial(n, k)) throw std::out_of_range("subset_unrank_colex: rank out of range");
  std::uint32_t mask = 0;
  int limit = n;
  for (int i = k; i >= 1; --i) {
    int pos = i - 1;
    for (int c = limit - 1; c >= i - 1; --c) {
      if (binomial(c, i) <= rank) {
        pos = c;
        break;
      }
    }
    rank -= binomial(pos, i);
    mask |= (1u << pos);
    limit = pos;
  }
  return mask;
}

}  // namespace magic24
