#include "magic24/labelings.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

#include "magic24/combinatorics.hpp"
#include "magic24/error.hpp"

namespace magic24 {

namespace {

void require_24cell_shape(const IncidenceStructure& s, const char* op) {
  if (s.vertex_count() != 24 || s.cell_count() != 24)
    fail(Errc::WrongStructure, std::string(op) + " requires the 24-cell");
}

// Appends, over colex ranks [lo, hi), the candidates whose every cell has odd
// popcount. Returns the number of candidates visited.
std::uint64_t scan_range(const std::vector<std::uint32_t>& cells, std::uint64_t lo,
                         std::uint64_t hi, std::vector<BinaryLabeling>& out) {
  std::uint64_t visited = 0;
  std::uint32_t mask = subset_unrank_colex(24, 12, lo);
  for (std::uint64_t r = lo; r < hi; ++r, mask = next_same_popcount(mask)) {
    ++visited;
    bool ok = true;
    for (std::uint32_t cm : cells) {
      if ((std::popcount(mask & cm) & 1) == 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(mask);
  }
  return visited;
}

}  // namespace

ParityClassification enumerate_parity_binary(const IncidenceStructure& s, int workers) {
  require_24cell_shape(s, "enumerate_parity_binary");
  const auto cells = cell_masks(s);
  const std::uint64_t total = binomial(24, 12);

  ParityClassification out;
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > total) workers = 1;

  std::vector<std::vector<BinaryLabeling>> chunks(static_cast<std::size_t>(workers));
  std::vector<std::uint64_t> visited(static_cast<std::size_t>(workers), 0);
  if (workers == 1) {
    visited[0] = scan_range(cells, 0, total, chunks[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      std::uint64_t lo = total * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(workers);
      std::uint64_t hi =
          total * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(workers);
      pool.emplace_back([&, w, lo, hi] {
        visited[static_cast<std::size_t>(w)] =
            scan_range(cells, lo, hi, chunks[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& chunk : chunks)
    out.solutions.insert(out.solutions.end(), chunk.begin(), chunk.end());
  for (std::uint64_t v : visited) out.total_candidates += v;

  for (BinaryLabeling sol : out.solutions) {
    bool balanced = true;
    for (std::uint32_t cm : cells) {
      if (std::popcount(sol & cm) != 3) {
        balanced = false;
        break;
      }
    }
    (balanced ? out.balanced : out.unbalanced).push_back(sol);
  }
  return out;
}

Gf2ParityResult parity_solutions_gf2(const IncidenceStructure& s) {
  require_24cell_shape(s, "parity_solutions_gf2");
  const auto cells = cell_masks(s);

  // Row encoding: bits 0..23 coefficients, bit 24 the right-hand side.
  constexpr std::uint32_t kRhs = 1u << 24;
  std::vector<std::uint32_t> rows;
  rows.reserve(cells.size());
  for (std::uint32_t cm : cells) rows.push_back(cm | kRhs);

  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < 24; ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if ((rows[static_cast<std::size_t>(r)] >> col) & 1u) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(piv)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != rank && ((rows[static_cast<std::size_t>(r)] >> col) & 1u))
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < static_cast<int>(rows.size()); ++r)
    if (rows[static_cast<std::size_t>(r)] != 0)
      fail(Errc::Inconsistent, "parity system has no solution");

  std::uint32_t particular = 0;
  for (int r = 0; r < rank; ++r)
    if (rows[static_cast<std::size_t>(r)] & kRhs)
      particular |= (1u << pivot_col[static_cast<std::size_t>(r)]);

  std::vector<char> is_pivot(24, 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::uint32_t> basis;
  for (int c = 0; c < 24; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    std::uint32_t vec = 1u << c;
    for (int r = 0; r < rank; ++r)
      if ((rows[static_cast<std::size_t>(r)] >> c) & 1u)
        vec |= (1u << pivot_col[static_cast<std::size_t>(r)]);
    basis.push_back(vec);
  }

  Gf2ParityResult out;
  out.rank = rank;
  out.coset_size = 1ull << (24 - rank);
  for (std::uint64_t sel = 0; sel < out.coset_size; ++sel) {
    std::uint32_t x = particular;
    for (std::size_t b = 0; b < basis.size(); ++b)
      if ((sel >> b) & 1u) x ^= basis[b];
    if (std::popcount(x) == 12) out.solutions.push_back(x);
  }
  std::sort(out.solutions.begin(), out.solutions.end());
  return out;
}

TernaryLabeling ternary_16cell(const IncidenceStructure& s) {
  require_24cell_shape(s, "ternary_16cell");
  TernaryLabeling out{};
  for (int i = 0; i < 24; ++i) {
    const auto& v = s.vertices[static_cast<std::size_t>(i)];
    int p = -1, q = -1, nonzero = 0;
    for (int d = 0; d < static_cast<int>(v.size()); ++d) {
      if (v[static_cast<std::size_t>(d)] != 0) {
        ++nonzero;
        if (p < 0)
          p = d;
        else
          q = d;
      }
    }
    if (v.size() != 4 || nonzero != 2)
      fail(Errc::WrongStructure, "vertex support is not a coordinate pair");
    // {0,1},{2,3} -> 0; {0,2},{1,3} -> 1; {0,3},{1,2} -> 2
    int trit;
    if ((p == 0 && q == 1) || (p == 2 && q == 3))
      trit = 0;
    else if ((p == 0 && q == 2) || (p == 1 && q == 3))
      trit = 1;
    else
      trit = 2;
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(trit);
  }
  return out;
}

TernaryLabeling permute_trits(const TernaryLabeling& t, const std::array<int, 3>& pi) {
  bool seen[3] = {false, false, false};
  for (int x : pi) {
    if (x < 0 || x > 2 || seen[x]) throw std::invalid_argument("not a permutation of {0,1,2}");
    seen[x] = true;
  }
  TernaryLabeling out{};
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = static_cast<std::uint8_t>(pi[static_cast<std::size_t>(t[i])]);
  return out;
}

std::array<std::array<int, 3>, 6> all_trit_perms() {
  return {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
}

}  // namespace magic24
