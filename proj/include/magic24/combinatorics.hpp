#pragma once

#include <cstdint>

namespace magic24 {

/// Exact n-choose-k; throws on overflow of uint64.
std::uint64_t binomial(int n, int k);

/// Gosper's hack: smallest integer greater than `mask` with the same popcount.
/// Returns 0 on overflow past the top combination.
std::uint32_t next_same_popcount(std::uint32_t mask);

/// Rank of a k-subset bitmask in colexicographic order (= ascending numeric
/// order of masks with equal popcount). Rank 0 is the mask with the k lowest
/// bits set.
std::uint64_t subset_rank_colex(std::uint32_t mask);

/// Inverse of subset_rank_colex for k-subsets of {0,...,n-1}.
std::uint32_t subset_unrank_colex(int n, int k, std::uint64_t rank);

}  // namespace magic24
