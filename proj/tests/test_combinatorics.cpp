#include "doctest.h"

#include <cstdint>
#include <vector>

#include "magic24/combinatorics.hpp"

using namespace magic24;

TEST_SUITE("combinatorics") {

TEST_CASE("binomial small values and symmetry") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(24, 12) == 2704156);  // the parity candidate count
  for (int k = 0; k <= 24; ++k) CHECK(binomial(24, k) == binomial(24, 24 - k));
}

TEST_CASE("binomial Pascal identity over a grid") {
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("next_same_popcount walks all k-subsets in ascending order") {
  const int n = 10, k = 4;
  std::uint32_t mask = (1u << k) - 1;
  std::uint64_t count = 0;
  std::uint32_t previous = 0;
  while (mask < (1u << n)) {
    CHECK(mask > previous);
    CHECK(static_cast<unsigned>(__builtin_popcount(mask)) == k);
    previous = mask;
    ++count;
    mask = next_same_popcount(mask);
    if (mask == 0) break;
  }
  CHECK(count == binomial(n, k));
}

TEST_CASE("colex rank is the position in ascending mask order") {
  const int n = 12, k = 5;
  std::uint32_t mask = (1u << k) - 1;
  std::uint64_t expected_rank = 0;
  while (mask < (1u << n)) {
    CHECK(subset_rank_colex(mask) == expected_rank);
    CHECK(subset_unrank_colex(n, k, expected_rank) == mask);
    ++expected_rank;
    mask = next_same_popcount(mask);
    if (mask == 0) break;
  }
  CHECK(expected_rank == binomial(n, k));
}

TEST_CASE("unrank round-trips at the 24-choose-12 extremes") {
  const std::uint64_t total = binomial(24, 12);
  for (std::uint64_t rank : std::vector<std::uint64_t>{0, 1, 2, total / 2, total - 2, total - 1}) {
    std::uint32_t mask = subset_unrank_colex(24, 12, rank);
    CHECK(__builtin_popcount(mask) == 12);
    CHECK(subset_rank_colex(mask) == rank);
  }
  CHECK(subset_unrank_colex(24, 12, 0) == 0xFFFu);             // twelve lowest bits
  CHECK(subset_unrank_colex(24, 12, total - 1) == 0xFFF000u);  // twelve highest bits
}

}  // TEST_SUITE
