#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace magic24 {

/// Exact coordinates with denominator 1 or 2, stored as twice their value.
/// A 24-cell vertex (1,0,-1,0) is stored as {2,0,-2,0}; a cell center
/// (1/2,1/2,1/2,1/2) as {1,1,1,1}. No floating point is used anywhere.
using Coords2x = std::vector<int>;

/// Dot product of two doubled coordinate vectors: 4 * (true dot product).
int dot4x(const Coords2x& a, const Coords2x& b);

struct Cell {
  Coords2x center;           // doubled, may be empty for synthetic structures
  std::vector<int> members;  // 0-based vertex ids, sorted ascending
};

struct Regularity {
  int members_per_cell = 0;  // k
  int cells_per_vertex = 0;  // r
};

/// A vertex-cell incidence structure. Vertex i is identified by its position
/// in `vertices` (0-based internally; files and printouts are 1-based).
struct IncidenceStructure {
  std::string name;
  std::vector<Coords2x> vertices;  // doubled coordinates
  std::vector<Cell> cells;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int cell_count() const { return static_cast<int>(cells.size()); }
};

/// Labels; labels[i] is the label assigned to vertex i.
using Labeling = std::vector<int>;

/// Vertex permutation; image[i] is the 0-based image of vertex i.
using Perm = std::vector<int>;

struct LabelingReport {
  bool is_permutation = false;
  std::vector<long long> cell_sums;
  bool magic = false;
  std::optional<long long> magic_sum;
};

/// The 24-cell: 24 vertices (coordinate permutations of (+-1,+-1,0,0), indexed
/// in descending lexicographic order) and 24 octahedral cells (8 with centers
/// the permutations of (+-1,0,0,0), then 16 with centers s/2 for sign vectors
/// s in {+-1}^4, each family in descending lexicographic order of center).
/// Membership: v belongs to a cell iff dot(v, center) = 1.
IncidenceStructure build_24cell();

/// The cube: 8 vertices (+-1,+-1,+-1), 6 square faces as cells.
IncidenceStructure build_cube();

/// The tesseract: 16 vertices (+-1,+-1,+-1,+-1), 8 cubical cells.
IncidenceStructure build_tesseract();

/// (k, r) when every cell has k members and every vertex lies in r cells.
std::optional<Regularity> regularity(const IncidenceStructure& s);

/// Throws ParseError if a member index is out of range, unsorted or repeated.
void validate(const IncidenceStructure& s);

/// Forced common cell sum r * |V| (|V|+1) / 2 / #cells.
/// Throws NonRegular / NonIntegral.
long long magic_sum(const IncidenceStructure& s);

/// Checks a candidate labeling: permutation of 1..|V| and equal cell sums.
/// Throws LengthMismatch.
LabelingReport verify_labeling(const IncidenceStructure& s, const Labeling& labels);

/// The fixed-point-free involution pairing each vertex with the vertex at the
/// negated coordinates. Throws NotCentrallySymmetric.
Perm antipode_map(const IncidenceStructure& s);

/// All 3-cliques of the edge graph, where edges join vertex pairs at minimal
/// squared distance. Triples are sorted, 0-based.
std::vector<std::array<int, 3>> triangles(const IncidenceStructure& s);

/// Cell member sets as bitmasks (bit i = vertex i). Requires |V| <= 32.
std::vector<std::uint32_t> cell_masks(const IncidenceStructure& s);

}  // namespace magic24
