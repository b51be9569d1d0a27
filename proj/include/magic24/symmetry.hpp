#pragma once

#include <cstddef>
#include <vector>

#include "magic24/incidence.hpp"

namespace magic24 {

/// An explicit permutation group on {0,...,degree-1}.
struct SymmetryGroup {
  int degree = 0;
  std::vector<Perm> elements;  // sorted lexicographically; contains identity

  std::size_t order() const { return elements.size(); }
};

Perm identity_perm(int n);

/// (f after g): returns the permutation i -> f[g[i]].
Perm compose(const Perm& f, const Perm& g);

Perm inverse(const Perm& f);

/// Breadth-first closure of the generated group. Throws CapExceeded if the
/// closure grows past `cap` elements.
SymmetryGroup group_closure(const std::vector<Perm>& generators, std::size_t cap);

/// The four generators of the full 24-cell symmetry group as vertex
/// permutations: coordinate transposition (1 2), coordinate 4-cycle (1 2 3 4),
/// the sign flip diag(-1,1,1,1), and the triality matrix with rows
/// (1,1,1,1)/2, (1,1,-1,-1)/2, (1,-1,1,-1)/2, (1,-1,-1,1)/2. The first three
/// generate the signed-permutation subgroup of order 384.
/// Throws GeneratorNotAutomorphism if an image coordinate is not a vertex.
std::vector<Perm> symmetry_24cell_generators(const IncidenceStructure& s);

/// Full symmetry group of the 24-cell (order 1152).
SymmetryGroup symmetry_24cell(const IncidenceStructure& s);

/// Combinatorial cross-check: all vertex permutations mapping the cell family
/// onto itself, found by backtracking with partial-image pruning.
SymmetryGroup automorphisms(const IncidenceStructure& s, std::size_t cap);

/// Lexicographically smallest sequence (labels[p[0]], ..., labels[p[n-1]])
/// over all p in the group. Throws LengthMismatch.
Labeling canonical_form(const Labeling& labels, const SymmetryGroup& g);

struct OrbitCount {
  std::vector<Labeling> representatives;  // canonical forms, sorted

  std::size_t count() const { return representatives.size(); }
};

/// Distinct canonical forms of the given labelings. Chunk-parallel when
/// workers > 1; result independent of the worker count.
OrbitCount count_orbits(const std::vector<Labeling>& labelings, const SymmetryGroup& g,
                        int workers = 1);

/// Number of input labelings per canonical form. When the input set is
/// duplicate-free and closed under the group this is the orbit size.
std::vector<std::pair<Labeling, std::size_t>> orbit_histogram(
    const std::vector<Labeling>& labelings, const SymmetryGroup& g, int workers = 1);

}  // namespace magic24
