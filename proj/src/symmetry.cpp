#include "magic24/symmetry.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "magic24/error.hpp"

namespace magic24 {

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& f, const Perm& g) {
  if (f.size() != g.size()) fail(Errc::LengthMismatch, "composing permutations of different degree");
  Perm out(f.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[static_cast<std::size_t>(g[i])];
  return out;
}

Perm inverse(const Perm& f) {
  Perm out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
  return out;
}

SymmetryGroup group_closure(const std::vector<Perm>& generators, std::size_t cap) {
  if (generators.empty()) fail(Errc::LengthMismatch, "no generators");
  const std::size_t degree = generators.front().size();
  for (const Perm& g : generators) {
    if (g.size() != degree) fail(Errc::LengthMismatch, "generator degrees differ");
    std::vector<char> seen(degree, 0);
    for (int x : g) {
      if (x < 0 || static_cast<std::size_t>(x) >= degree || seen[static_cast<std::size_t>(x)])
        fail(Errc::LengthMismatch, "generator is not a permutation");
      seen[static_cast<std::size_t>(x)] = 1;
    }
  }
  std::set<Perm> elements;
  std::vector<Perm> frontier;
  elements.insert(identity_perm(static_cast<int>(degree)));
  frontier.push_back(identity_perm(static_cast<int>(degree)));
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : generators) {
        Perm q = compose(g, p);
        if (elements.insert(q).second) {
          if (elements.size() > cap) fail(Errc::CapExceeded, "group closure exceeded cap");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  SymmetryGroup out;
  out.degree = static_cast<int>(degree);
  out.elements.assign(elements.begin(), elements.end());
  return out;
}

namespace {

// 4x4 coordinate matrices with entries in halves, stored doubled.
using Mat2x = std::array<std::array<int, 4>, 4>;

Perm matrix_to_vertex_perm(const IncidenceStructure& s, const Mat2x& m) {
  std::map<Coords2x, int> index;
  for (int i = 0; i < s.vertex_count(); ++i) index.emplace(s.vertices[static_cast<std::size_t>(i)], i);
  Perm out(s.vertices.size());
  for (int i = 0; i < s.vertex_count(); ++i) {
    const auto& v = s.vertices[static_cast<std::size_t>(i)];
    if (v.size() != 4) fail(Errc::WrongStructure, "expected 4-dimensional coordinates");
    Coords2x w(4);
    for (int r = 0; r < 4; ++r) {
      int acc = 0;
      for (int c = 0; c < 4; ++c) acc += m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] * v[static_cast<std::size_t>(c)];
      if (acc % 2 != 0)
        fail(Errc::GeneratorNotAutomorphism, "generator image is not a half-integer point");
      w[static_cast<std::size_t>(r)] = acc / 2;
    }
    auto it = index.find(w);
    if (it == index.end())
      fail(Errc::GeneratorNotAutomorphism, "generator image coordinate is not a vertex");
    out[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

}  // namespace

std::vector<Perm> symmetry_24cell_generators(const IncidenceStructure& s) {
  if (s.vertex_count() != 24) fail(Errc::WrongStructure, "expected the 24-cell");
  auto scaled = [](std::array<std::array<int, 4>, 4> m) {
    for (auto& row : m)
      for (int& x : row) x *= 2;
    return m;
  };
  Mat2x swap12 = scaled({{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  Mat2x cycle = scaled({{{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}});
  Mat2x flip1 = scaled({{{-1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}});
  // entries +-1/2, already doubled
  Mat2x triality = {{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  return {matrix_to_vertex_perm(s, swap12), matrix_to_vertex_perm(s, cycle),
          matrix_to_vertex_perm(s, flip1), matrix_to_vertex_perm(s, triality)};
}

SymmetryGroup symmetry_24cell(const IncidenceStructure& s) {
  return group_closure(symmetry_24cell_generators(s), 10000);
}

namespace {

struct AutSearch {
  int n = 0;
  std::vector<std::vector<int>> common;  // common[i][j] = #cells containing both i and j
  std::set<std::vector<int>> cell_family;
  const IncidenceStructure* s = nullptr;
  std::size_t cap = 0;
  std::vector<Perm> found;
  Perm image;
  std::vector<char> used;

  bool full_image_ok() const {
    for (const auto& c : s->cells) {
      std::vector<int> img;
      img.reserve(c.members.size());
      for (int v : c.members) img.push_back(image[static_cast<std::size_t>(v)]);
      std::sort(img.begin(), img.end());
      if (!cell_family.count(img)) return false;
    }
    return true;
  }

  void rec(int depth) {
    if (depth == n) {
      if (full_image_ok()) {
        found.push_back(image);
        if (found.size() > cap) fail(Errc::CapExceeded, "automorphism count exceeded cap");
      }
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int i = 0; i < depth; ++i) {
        if (common[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])][static_cast<std::size_t>(w)] !=
            common[static_cast<std::size_t>(i)][static_cast<std::size_t>(depth)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(depth)] = w;
      used[static_cast<std::size_t>(w)] = 1;
      rec(depth + 1);
      used[static_cast<std::size_t>(w)] = 0;
    }
  }
};

}  // namespace

SymmetryGroup automorphisms(const IncidenceStructure& s, std::size_t cap) {
  AutSearch search;
  search.n = s.vertex_count();
  search.s = &s;
  search.cap = cap;
  search.common.assign(static_cast<std::size_t>(search.n),
                       std::vector<int>(static_cast<std::size_t>(search.n), 0));
  for (const auto& c : s.cells) {
    for (int a : c.members)
      for (int b : c.members)
        search.common[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]++;
    search.cell_family.insert(c.members);
  }
  search.image.assign(static_cast<std::size_t>(search.n), 0);
  search.used.assign(static_cast<std::size_t>(search.n), 0);
  search.rec(0);
  std::sort(search.found.begin(), search.found.end());
  SymmetryGroup out;
  out.degree = search.n;
  out.elements = std::move(search.found);
  return out;
}

Labeling canonical_form(const Labeling& labels, const SymmetryGroup& g) {
  if (static_cast<int>(labels.size()) != g.degree)
    fail(Errc::LengthMismatch, "labeling length does not match group degree");
  const std::size_t n = labels.size();
  Labeling best = labels;  // identity is in the group
  for (const Perm& p : g.elements) {
    std::size_t i = 0;
    for (; i < n; ++i) {
      int x = labels[static_cast<std::size_t>(p[i])];
      if (x != best[i]) {
        if (x < best[i]) {
          for (std::size_t j = 0; j < n; ++j) best[j] = labels[static_cast<std::size_t>(p[j])];
        }
        break;
      }
    }
  }
  return best;
}

OrbitCount count_orbits(const std::vector<Labeling>& labelings, const SymmetryGroup& g,
                        int workers) {
  auto sized = orbit_histogram(labelings, g, workers);
  OrbitCount out;
  out.representatives.reserve(sized.size());
  for (auto& [rep, sz] : sized) out.representatives.push_back(std::move(rep));
  return out;
}

std::vector<std::pair<Labeling, std::size_t>> orbit_histogram(
    const std::vector<Labeling>& labelings, const SymmetryGroup& g, int workers) {
  for (const auto& l : labelings)
    if (static_cast<int>(l.size()) != g.degree)
      fail(Errc::LengthMismatch, "labeling length does not match group degree");
  if (workers < 1) workers = 1;
  if (static_cast<std::size_t>(workers) > labelings.size() && !labelings.empty())
    workers = static_cast<int>(labelings.size());
  if (labelings.empty()) return {};

  std::vector<std::map<Labeling, std::size_t>> partial(static_cast<std::size_t>(workers));
  auto worker_fn = [&](int w) {
    std::size_t lo = labelings.size() * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
    std::size_t hi =
        labelings.size() * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
    auto& local = partial[static_cast<std::size_t>(w)];
    for (std::size_t i = lo; i < hi; ++i) local[canonical_form(labelings[i], g)]++;
  };
  if (workers == 1) {
    worker_fn(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
    for (auto& t : pool) t.join();
  }
  std::map<Labeling, std::size_t> merged;
  for (auto& part : partial)
    for (auto& [rep, sz] : part) merged[rep] += sz;
  return {merged.begin(), merged.end()};
}

}  // namespace magic24
