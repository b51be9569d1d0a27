#include "magic24/incidence.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "magic24/error.hpp"

namespace magic24 {

int dot4x(const Coords2x& a, const Coords2x& b) {
  if (a.size() != b.size()) fail(Errc::LengthMismatch, "coordinate dimensions differ");
  int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

namespace {

// Members of a cell under the dot-product rule dot(v, center) = 1, which in
// doubled coordinates reads dot4x(v, center) = 4.
std::vector<int> members_by_dot(const std::vector<Coords2x>& vertices, const Coords2x& center) {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (dot4x(vertices[i], center) == 4) out.push_back(static_cast<int>(i));
  return out;
}

IncidenceStructure hypercube_like(std::string name, int dim) {
  IncidenceStructure s;
  s.name = std::move(name);
  // vertices {+-1}^dim, descending lex
  int n = 1 << dim;
  for (int code = 0; code < n; ++code) {
    Coords2x v(dim);
    for (int d = 0; d < dim; ++d) v[d] = ((code >> d) & 1) ? -2 : 2;
    s.vertices.push_back(std::move(v));
  }
  std::sort(s.vertices.begin(), s.vertices.end(), std::greater<>());
  // facets: centers +-e_i, descending lex
  std::vector<Coords2x> centers;
  for (int d = 0; d < dim; ++d)
    for (int sign : {2, -2}) {
      Coords2x c(dim, 0);
      c[d] = sign;
      centers.push_back(std::move(c));
    }
  std::sort(centers.begin(), centers.end(), std::greater<>());
  for (auto& c : centers) s.cells.push_back({c, members_by_dot(s.vertices, c)});
  return s;
}

}  // namespace

IncidenceStructure build_24cell() {
  IncidenceStructure s;
  s.name = "24cell";
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      for (int sp : {2, -2})
        for (int sq : {2, -2}) {
          Coords2x v(4, 0);
          v[p] = sp;
          v[q] = sq;
          s.vertices.push_back(std::move(v));
        }
  std::sort(s.vertices.begin(), s.vertices.end(), std::greater<>());

  // 8 axis-family centers (+-1,0,0,0)..., descending lex
  std::vector<Coords2x> axis;
  for (int d = 0; d < 4; ++d)
    for (int sign : {2, -2}) {
      Coords2x c(4, 0);
      c[d] = sign;
      axis.push_back(std::move(c));
    }
  std::sort(axis.begin(), axis.end(), std::greater<>());
  // 16 sign-family centers s/2, s in {+-1}^4, descending lex of s
  std::vector<Coords2x> half;
  for (int code = 0; code < 16; ++code) {
    Coords2x c(4);
    for (int d = 0; d < 4; ++d) c[d] = ((code >> d) & 1) ? -1 : 1;
    half.push_back(std::move(c));
  }
  std::sort(half.begin(), half.end(), std::greater<>());

  for (auto& c : axis) s.cells.push_back({c, members_by_dot(s.vertices, c)});
  for (auto& c : half) s.cells.push_back({c, members_by_dot(s.vertices, c)});
  return s;
}

IncidenceStructure build_cube() { return hypercube_like("cube", 3); }

IncidenceStructure build_tesseract() { return hypercube_like("tesseract", 4); }

std::optional<Regularity> regularity(const IncidenceStructure& s) {
  if (s.cells.empty() || s.vertices.empty()) return std::nullopt;
  int k = static_cast<int>(s.cells.front().members.size());
  std::vector<int> per_vertex(s.vertices.size(), 0);
  for (const auto& c : s.cells) {
    if (static_cast<int>(c.members.size()) != k) return std::nullopt;
    for (int v : c.members) per_vertex[static_cast<std::size_t>(v)]++;
  }
  int r = per_vertex.front();
  for (int x : per_vertex)
    if (x != r) return std::nullopt;
  return Regularity{k, r};
}

void validate(const IncidenceStructure& s) {
  int n = s.vertex_count();
  for (const auto& c : s.cells) {
    int prev = -1;
    for (int v : c.members) {
      if (v < 0 || v >= n) fail(Errc::ParseError, "cell member out of range");
      if (v <= prev) fail(Errc::ParseError, "cell members not strictly ascending");
      prev = v;
    }
  }
}

long long magic_sum(const IncidenceStructure& s) {
  int n = s.vertex_count();
  if (s.cells.empty()) fail(Errc::NonRegular, "structure has no cells");
  std::vector<int> per_vertex(static_cast<std::size_t>(n), 0);
  for (const auto& c : s.cells)
    for (int v : c.members) per_vertex[static_cast<std::size_t>(v)]++;
  int r = per_vertex.empty() ? 0 : per_vertex.front();
  for (int x : per_vertex)
    if (x != r) fail(Errc::NonRegular, "cells-per-vertex not uniform");
  long long total = static_cast<long long>(r) * n * (n + 1) / 2;
  if (total % s.cell_count() != 0) fail(Errc::NonIntegral, "magic sum is not an integer");
  return total / s.cell_count();
}

LabelingReport verify_labeling(const IncidenceStructure& s, const Labeling& labels) {
  int n = s.vertex_count();
  if (static_cast<int>(labels.size()) != n)
    fail(Errc::LengthMismatch, "labeling length does not match vertex count");
  LabelingReport rep;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  rep.is_permutation = true;
  for (int x : labels) {
    if (x < 1 || x > n || seen[static_cast<std::size_t>(x)]) {
      rep.is_permutation = false;
      break;
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  rep.cell_sums.reserve(s.cells.size());
  for (const auto& c : s.cells) {
    long long sum = 0;
    for (int v : c.members) sum += labels[static_cast<std::size_t>(v)];
    rep.cell_sums.push_back(sum);
  }
  bool equal = std::all_of(rep.cell_sums.begin(), rep.cell_sums.end(),
                           [&](long long x) { return x == rep.cell_sums.front(); });
  rep.magic = rep.is_permutation && !rep.cell_sums.empty() && equal;
  if (rep.magic) rep.magic_sum = rep.cell_sums.front();
  return rep;
}

Perm antipode_map(const IncidenceStructure& s) {
  std::map<Coords2x, int> index;
  for (int i = 0; i < s.vertex_count(); ++i) {
    if (!index.emplace(s.vertices[static_cast<std::size_t>(i)], i).second)
      fail(Errc::NotCentrallySymmetric, "duplicate vertex coordinates");
  }
  Perm out(s.vertices.size());
  for (int i = 0; i < s.vertex_count(); ++i) {
    Coords2x neg = s.vertices[static_cast<std::size_t>(i)];
    for (int& x : neg) x = -x;
    auto it = index.find(neg);
    if (it == index.end()) fail(Errc::NotCentrallySymmetric, "negated vertex not in structure");
    if (it->second == i) fail(Errc::NotCentrallySymmetric, "vertex fixed by negation");
    out[static_cast<std::size_t>(i)] = it->second;
  }
  return out;
}

std::vector<std::array<int, 3>> triangles(const IncidenceStructure& s) {
  int n = s.vertex_count();
  std::vector<std::array<int, 3>> out;
  if (n < 3) return out;
  // squared distance in doubled coordinates = 4 * true squared distance
  auto dist2 = [&](int i, int j) {
    const auto& a = s.vertices[static_cast<std::size_t>(i)];
    const auto& b = s.vertices[static_cast<std::size_t>(j)];
    long long acc = 0;
    for (std::size_t d = 0; d < a.size(); ++d) {
      long long diff = a[d] - b[d];
      acc += diff * diff;
    }
    return acc;
  };
  long long dmin = std::numeric_limits<long long>::max();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dmin = std::min(dmin, dist2(i, j));
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n),
                                     std::vector<char>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist2(i, j) == dmin) adj[i][j] = adj[j][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (int k = j + 1; k < n; ++k)
        if (adj[i][k] && adj[j][k]) out.push_back({i, j, k});
    }
  return out;
}

std::vector<std::uint32_t> cell_masks(const IncidenceStructure& s) {
  if (s.vertex_count() > 32) fail(Errc::CapExceeded, "cell_masks requires at most 32 vertices");
  std::vector<std::uint32_t> out;
  out.reserve(s.cells.size());
  for (const auto& c : s.cells) {
    std::uint32_t m = 0;
    for (int v : c.members) m |= (1u << v);
    out.push_back(m);
  }
  return out;
}

}  // namespace magic24
