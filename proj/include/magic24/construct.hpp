#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "magic24/incidence.hpp"
#include "magic24/labelings.hpp"

namespace magic24 {

/// Mixed-radix place values for digit radices (2,2,2,3) with the ternary
/// radix at `ternary_position` (0 = most significant digit).
/// Positions 3,2,1,0 give weight tuples (12,6,3,1), (12,6,2,1), (12,4,2,1),
/// (8,4,2,1), applied to digits ordered most-significant-first.
struct WeightScheme {
  int ternary_position = 3;
  std::array<int, 4> weights{};
};

WeightScheme weight_scheme(int ternary_position);

/// Per-vertex digit tuple (b1, b2, b3, t).
using DigitTuple = std::array<std::uint8_t, 4>;
using DigitMap = std::array<DigitTuple, 24>;

/// The map v -> (b1(v), b2(v), b3(v), t(v)) when it is a bijection onto
/// {0,1}^3 x {0,1,2}; empty otherwise.
std::optional<DigitMap> superimpose(BinaryLabeling b1, BinaryLabeling b2, BinaryLabeling b3,
                                    const TernaryLabeling& t);

/// All ordered triples from the balanced pool whose superimposition with t is
/// bijective. Throws PoolMismatch unless the pool has exactly 64 entries.
std::vector<std::array<BinaryLabeling, 3>> enumerate_triples(
    const std::vector<BinaryLabeling>& pool, const TernaryLabeling& t);

/// label(v) = sum of weights * digits + 1, with the ternary digit at the
/// scheme's position and b1, b2, b3 filling the remaining positions
/// most-significant-first. Throws InvalidSuperimposition.
Labeling compose_labels(BinaryLabeling b1, BinaryLabeling b2, BinaryLabeling b3,
                        const TernaryLabeling& t, const WeightScheme& w);

struct Provenance {
  BinaryLabeling b1 = 0, b2 = 0, b3 = 0;
  std::array<int, 3> trit_perm{0, 1, 2};
  int scheme = 3;  // = ternary_position
};

struct MagicLabeling {
  Labeling labels;
  std::optional<Provenance> provenance;
};

struct ConstructionResult {
  std::uint64_t raw_count = 0;             // emissions before dedup (6 * 3072 * 4)
  std::vector<MagicLabeling> labelings;    // distinct, sorted by label sequence
};

/// Full linear-combination family: 6 trit permutations x valid triples x 4
/// weight schemes, deduplicated by label sequence.
ConstructionResult construct_all(const IncidenceStructure& s, int workers = 1);

}  // namespace magic24
