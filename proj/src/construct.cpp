#include "magic24/construct.hpp"

#include <algorithm>
#include <map>

#include "magic24/error.hpp"

namespace magic24 {

WeightScheme weight_scheme(int ternary_position) {
  if (ternary_position < 0 || ternary_position > 3)
    fail(Errc::InvalidSuperimposition, "ternary_position must be in 0..3");
  std::array<int, 4> radices{2, 2, 2, 2};
  radices[static_cast<std::size_t>(ternary_position)] = 3;
  WeightScheme w;
  w.ternary_position = ternary_position;
  int place = 1;
  for (int pos = 3; pos >= 0; --pos) {
    w.weights[static_cast<std::size_t>(pos)] = place;
    place *= radices[static_cast<std::size_t>(pos)];
  }
  return w;
}

namespace {

inline int digit_code(int b1, int b2, int b3, int t) { return ((b1 * 2 + b2) * 2 + b3) * 3 + t; }

// 24-bit "seen" mask test over the 24 possible digit tuples.
inline bool tuples_bijective(BinaryLabeling b1, BinaryLabeling b2, BinaryLabeling b3,
                             const TernaryLabeling& t) {
  std::uint32_t seen = 0;
  for (int v = 0; v < 24; ++v) {
    int code = digit_code((b1 >> v) & 1, (b2 >> v) & 1, (b3 >> v) & 1, t[static_cast<std::size_t>(v)]);
    std::uint32_t bit = 1u << code;
    if (seen & bit) return false;
    seen |= bit;
  }
  return true;
}

}  // namespace

std::optional<DigitMap> superimpose(BinaryLabeling b1, BinaryLabeling b2, BinaryLabeling b3,
                                    const TernaryLabeling& t) {
  if (!tuples_bijective(b1, b2, b3, t)) return std::nullopt;
  DigitMap out{};
  for (int v = 0; v < 24; ++v) {
    out[static_cast<std::size_t>(v)] = {static_cast<std::uint8_t>((b1 >> v) & 1),
                                        static_cast<std::uint8_t>((b2 >> v) & 1),
                                        static_cast<std::uint8_t>((b3 >> v) & 1),
                                        t[static_cast<std::size_t>(v)]};
  }
  return out;
}

std::vector<std::array<BinaryLabeling, 3>> enumerate_triples(
    const std::vector<BinaryLabeling>& pool, const TernaryLabeling& t) {
  if (pool.size() != 64) fail(Errc::PoolMismatch, "balanced pool must have exactly 64 labelings");
  std::vector<std::array<BinaryLabeling, 3>> out;
  for (BinaryLabeling b1 : pool)
    for (BinaryLabeling b2 : pool)
      for (BinaryLabeling b3 : pool)
        if (tuples_bijective(b1, b2, b3, t)) out.push_back({b1, b2, b3});
  return out;
}

Labeling compose_labels(BinaryLabeling b1, BinaryLabeling b2, BinaryLabeling b3,
                        const TernaryLabeling& t, const WeightScheme& w) {
  if (!tuples_bijective(b1, b2, b3, t))
    fail(Errc::InvalidSuperimposition, "superimposition does not cover all 24 digit tuples");
  Labeling out(24);
  for (int v = 0; v < 24; ++v) {
    std::array<int, 4> digits{};
    int bpos = 0;
    const int binary[3] = {static_cast<int>((b1 >> v) & 1), static_cast<int>((b2 >> v) & 1),
                           static_cast<int>((b3 >> v) & 1)};
    for (int pos = 0; pos < 4; ++pos) {
      if (pos == w.ternary_position)
        digits[static_cast<std::size_t>(pos)] = t[static_cast<std::size_t>(v)];
      else
        digits[static_cast<std::size_t>(pos)] = binary[bpos++];
    }
    int value = 0;
    for (int pos = 0; pos < 4; ++pos)
      value += w.weights[static_cast<std::size_t>(pos)] * digits[static_cast<std::size_t>(pos)];
    out[static_cast<std::size_t>(v)] = value + 1;
  }
  return out;
}

ConstructionResult construct_all(const IncidenceStructure& s, int workers) {
  const auto parity = enumerate_parity_binary(s, workers);
  const auto& pool = parity.balanced;
  const TernaryLabeling base = ternary_16cell(s);
  const auto triples = enumerate_triples(pool, base);

  ConstructionResult result;
  std::map<Labeling, Provenance> distinct;
  for (const auto& pi : all_trit_perms()) {
    const TernaryLabeling t = permute_trits(base, pi);
    for (const auto& [b1, b2, b3] : triples) {
      // bijectivity is invariant under relabeling trits, so the triple list
      // computed for the base labeling stays valid for every permutation
      for (int pos : {3, 2, 1, 0}) {
        Labeling labels = compose_labels(b1, b2, b3, t, weight_scheme(pos));
        ++result.raw_count;
        distinct.try_emplace(std::move(labels), Provenance{b1, b2, b3, pi, pos});
      }
    }
  }
  result.labelings.reserve(distinct.size());
  for (auto& [labels, prov] : distinct) result.labelings.push_back({labels, prov});
  return result;
}

}  // namespace magic24
