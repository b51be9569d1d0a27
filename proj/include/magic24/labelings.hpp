#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "magic24/incidence.hpp"

namespace magic24 {

/// 24-bit vector; bit i (0-based) is the parity digit of vertex i.
using BinaryLabeling = std::uint32_t;

constexpr std::uint32_t kVertexMask24 = 0xFFFFFFu;

/// 24 trits in {0,1,2}; trits[i] is the ternary digit of vertex i.
using TernaryLabeling = std::array<std::uint8_t, 24>;

struct ParityClassification {
  std::uint64_t total_candidates = 0;
  std::vector<BinaryLabeling> solutions;   // ascending numeric (= colex) order
  std::vector<BinaryLabeling> balanced;    // exactly three 1s per cell
  std::vector<BinaryLabeling> unbalanced;  // some cell with one or five 1s
};

/// Scans every 24-bit vector of popcount 12 and keeps those giving every cell
/// an odd number of 1s. Chunked over colex rank ranges when workers > 1;
/// output is identical for any worker count.
ParityClassification enumerate_parity_binary(const IncidenceStructure& s, int workers = 1);

struct Gf2ParityResult {
  std::vector<BinaryLabeling> solutions;  // weight-12 coset elements, ascending
  int rank = 0;                           // GF(2) rank of the cell constraint system
  std::uint64_t coset_size = 0;           // 2^(24 - rank)
};

/// Independent route to the same solution set: solves the mod-2 system
/// {sum of bits over each cell = 1} by elimination, enumerates the affine
/// coset, and filters to popcount 12. Throws Inconsistent if unsolvable.
Gf2ParityResult parity_solutions_gf2(const IncidenceStructure& s);

constexpr BinaryLabeling complement(BinaryLabeling b) { return ~b & kVertexMask24; }

/// The ternary labeling from the three-16-cell decomposition: the trit of a
/// vertex is the partition class of its support pair, {1,2}/{3,4} -> 0,
/// {1,3}/{2,4} -> 1, {1,4}/{2,3} -> 2 (1-based coordinate positions).
TernaryLabeling ternary_16cell(const IncidenceStructure& s);

/// Applies a permutation of {0,1,2} entrywise.
TernaryLabeling permute_trits(const TernaryLabeling& t, const std::array<int, 3>& pi);

/// The 6 permutations of {0,1,2} in lexicographic order of their image tuples.
std::array<std::array<int, 3>, 6> all_trit_perms();

}  // namespace magic24
