#include "doctest.h"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <vector>

#include "magic24/error.hpp"
#include "magic24/incidence.hpp"
#include "magic24/labelings.hpp"

using namespace magic24;

TEST_SUITE("labelings") {

TEST_CASE("parity enumeration matches the frozen counts and boundary values") {
  IncidenceStructure s = build_24cell();
  ParityClassification pc = enumerate_parity_binary(s);
  CHECK(pc.total_candidates == 2704156);
  CHECK(pc.solutions.size() == 256);
  CHECK(pc.balanced.size() == 64);
  CHECK(pc.unbalanced.size() == 192);

  REQUIRE(pc.solutions.size() >= 4);
  CHECK(pc.solutions[0] == 291295);
  CHECK(pc.solutions[1] == 305887);
  CHECK(pc.solutions[2] == 333663);
  CHECK(pc.solutions[3] == 379999);
  CHECK(pc.solutions.back() == 16485920);
  CHECK(pc.balanced[0] == 2060551);
  CHECK(pc.balanced[1] == 2075143);
  CHECK(pc.balanced[2] == 3076235);
  CHECK(pc.balanced[3] == 3118603);

  CHECK(std::is_sorted(pc.solutions.begin(), pc.solutions.end()));
  CHECK(std::is_sorted(pc.balanced.begin(), pc.balanced.end()));
  CHECK(std::is_sorted(pc.unbalanced.begin(), pc.unbalanced.end()));
  // balanced + unbalanced partition the solutions
  std::vector<BinaryLabeling> merged;
  std::merge(pc.balanced.begin(), pc.balanced.end(), pc.unbalanced.begin(), pc.unbalanced.end(),
             std::back_inserter(merged));
  CHECK(merged == pc.solutions);
}

TEST_CASE("every solution has popcount 12 and odd per-cell counts in {1,3,5}") {
  IncidenceStructure s = build_24cell();
  auto masks = cell_masks(s);
  ParityClassification pc = enumerate_parity_binary(s);
  std::set<BinaryLabeling> balanced(pc.balanced.begin(), pc.balanced.end());
  for (BinaryLabeling b : pc.solutions) {
    CHECK(__builtin_popcount(b) == 12);
    bool all_three = true;
    for (std::uint32_t cell : masks) {
      int ones = __builtin_popcount(b & cell);
      CHECK((ones == 1 || ones == 3 || ones == 5));
      all_three = all_three && ones == 3;
    }
    CHECK(all_three == (balanced.count(b) == 1));
  }
}

TEST_CASE("antipodal vertices always carry opposite parity bits") {
  IncidenceStructure s = build_24cell();
  Perm anti = antipode_map(s);
  ParityClassification pc = enumerate_parity_binary(s);
  for (BinaryLabeling b : pc.solutions)
    for (int v = 0; v < 24; ++v)
      CHECK(((b >> v) & 1) != ((b >> anti[static_cast<std::size_t>(v)]) & 1));
}

TEST_CASE("worker count never changes the enumeration result") {
  IncidenceStructure s = build_24cell();
  ParityClassification one = enumerate_parity_binary(s, 1);
  for (int workers : {2, 3, 8}) {
    ParityClassification many = enumerate_parity_binary(s, workers);
    CHECK(many.total_candidates == one.total_candidates);
    CHECK(many.solutions == one.solutions);
    CHECK(many.balanced == one.balanced);
    CHECK(many.unbalanced == one.unbalanced);
  }
}

TEST_CASE("parity search rejects structures other than the 24-cell") {
  try {
    enumerate_parity_binary(build_cube());
    FAIL("expected WrongStructure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::WrongStructure);
  }
}

TEST_CASE("GF(2) elimination agrees with brute force, rank 14, coset 1024") {
  IncidenceStructure s = build_24cell();
  Gf2ParityResult gf2 = parity_solutions_gf2(s);
  CHECK(gf2.rank == 14);
  CHECK(gf2.coset_size == 1024);
  ParityClassification pc = enumerate_parity_binary(s);
  CHECK(gf2.solutions == pc.solutions);  // element for element
}

TEST_CASE("complement is an involution preserving balance and weight") {
  IncidenceStructure s = build_24cell();
  ParityClassification pc = enumerate_parity_binary(s);
  std::set<BinaryLabeling> balanced(pc.balanced.begin(), pc.balanced.end());
  for (BinaryLabeling b : pc.balanced) {
    BinaryLabeling c = complement(b);
    CHECK(complement(c) == b);
    CHECK(__builtin_popcount(c) == 12);
    CHECK(balanced.count(c) == 1);
  }
  CHECK(complement(0) == kVertexMask24);
}

TEST_CASE("ternary labeling equals the frozen support-pair classes") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  const std::array<std::uint8_t, 24> frozen{0, 1, 2, 2, 1, 0, 2, 1, 1, 2, 0, 0,
                                            0, 0, 2, 1, 1, 2, 0, 1, 2, 2, 1, 0};
  CHECK(t == frozen);
  // the definition on the three axis-aligned examples (vertices 1, 2, 3)
  CHECK(s.vertices[0] == Coords2x{2, 2, 0, 0});
  CHECK(t[0] == 0);
  CHECK(s.vertices[1] == Coords2x{2, 0, 2, 0});
  CHECK(t[1] == 1);
  CHECK(s.vertices[2] == Coords2x{2, 0, 0, 2});
  CHECK(t[2] == 2);
}

TEST_CASE("every cell carries each trit exactly twice") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  for (const Cell& c : s.cells) {
    std::array<int, 3> counts{};
    for (int v : c.members) ++counts[t[static_cast<std::size_t>(v)]];
    CHECK(counts == std::array<int, 3>{2, 2, 2});
  }
}

TEST_CASE("every triangle carries the trits 0, 1 and 2 once each") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  auto tris = triangles(s);
  REQUIRE(tris.size() == 96);
  for (const auto& tri : tris) {
    std::array<int, 3> counts{};
    for (int v : tri) ++counts[t[static_cast<std::size_t>(v)]];
    CHECK(counts == std::array<int, 3>{1, 1, 1});
  }
}

TEST_CASE("each trit class is a cross-polytope: non-antipodal members are orthogonal") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  Perm anti = antipode_map(s);
  for (int trit = 0; trit < 3; ++trit) {
    std::vector<int> members;
    for (int v = 0; v < 24; ++v)
      if (t[static_cast<std::size_t>(v)] == trit) members.push_back(v);
    CHECK(members.size() == 8);
    for (int a : members)
      for (int b : members) {
        if (a == b) continue;
        int dot = dot4x(s.vertices[static_cast<std::size_t>(a)],
                        s.vertices[static_cast<std::size_t>(b)]);
        if (anti[static_cast<std::size_t>(a)] == b)
          CHECK(dot == -8);  // antipodal pair
        else
          CHECK(dot == 0);  // orthogonal
      }
  }
  // antipodal vertices share their trit
  for (int v = 0; v < 24; ++v)
    CHECK(t[static_cast<std::size_t>(v)] == t[static_cast<std::size_t>(anti[static_cast<std::size_t>(v)])]);
}

TEST_CASE("permute_trits applies entrywise and validates its argument") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  CHECK(permute_trits(t, {0, 1, 2}) == t);
  TernaryLabeling swapped = permute_trits(t, {1, 0, 2});
  for (int v = 0; v < 24; ++v) {
    int expect = t[static_cast<std::size_t>(v)] == 0   ? 1
                 : t[static_cast<std::size_t>(v)] == 1 ? 0
                                                       : 2;
    CHECK(swapped[static_cast<std::size_t>(v)] == expect);
  }
  CHECK_THROWS_AS(permute_trits(t, {0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(permute_trits(t, {0, 1, 3}), std::invalid_argument);
}

TEST_CASE("the 6 trit permutations give distinct labelings, all balanced per cell") {
  IncidenceStructure s = build_24cell();
  TernaryLabeling t = ternary_16cell(s);
  auto perms = all_trit_perms();
  CHECK(perms[0] == std::array<int, 3>{0, 1, 2});
  CHECK(perms[5] == std::array<int, 3>{2, 1, 0});
  CHECK(std::is_sorted(perms.begin(), perms.end()));
  std::set<TernaryLabeling> variants;
  for (const auto& pi : perms) {
    TernaryLabeling variant = permute_trits(t, pi);
    variants.insert(variant);
    for (const Cell& c : s.cells) {
      std::array<int, 3> counts{};
      for (int v : c.members) ++counts[variant[static_cast<std::size_t>(v)]];
      CHECK(counts == std::array<int, 3>{2, 2, 2});
    }
  }
  CHECK(variants.size() == 6);
}

}  // TEST_SUITE
