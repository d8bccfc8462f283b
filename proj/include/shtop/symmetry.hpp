#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shtop/base.hpp"
#include "shtop/collapse.hpp"
#include "shtop/complex.hpp"

namespace shtop {

// Full element list; elements[g][v] is the image of vertex v.
struct AutomorphismGroup {
  std::vector<std::vector<Vertex>> elements;
  size_t order() const { return elements.size(); }
};

// All facet-preserving vertex permutations.
AutomorphismGroup automorphisms(const SimplicialComplex& K, const SearchLimits& lim = {});

std::vector<Vertex> vertex_orbit(const AutomorphismGroup& G, Vertex v);

// Aut(K) acts transitively on vertices.
bool is_vertex_homogeneous(const SimplicialComplex& K, const SearchLimits& lim = {});

// prec[v].test(w) iff every facet containing v also contains w.
// classes are the mutual-domination components; symmetric reports whether
// the relation itself is symmetric off the diagonal.
struct DominationClasses {
  std::vector<Bits> prec;
  bool symmetric = false;
  std::vector<std::vector<Vertex>> classes;
};

DominationClasses domination_classes(const SimplicialComplex& K);

// Full subcomplex on the smallest vertex of each domination class.
// Requires a vertex-homogeneous input; the result is cross-checked to be
// minimal and isomorphic to both the greedy core and the double nerve.
SimplicialComplex vh_core(const SimplicialComplex& K, const SearchLimits& lim = {});

// Replace each vertex by n clones (copy i of v is labelled "<label>_i");
// a set of clones spans a simplex iff the underlying vertices do.
SimplicialComplex multiple(const SimplicialComplex& K, int n);

// Per-vertex clone counts; F[v] >= 1.
SimplicialComplex weighted_multiple(const SimplicialComplex& K, const std::vector<int>& F);

// Writes a vertex-homogeneous K as (core, n) with K isomorphic to the n-th
// multiple of the core. The isomorphism is verified before returning; only a
// budget failure yields nullopt.
std::optional<std::pair<SimplicialComplex, int>> factor_as_multiple(const SimplicialComplex& K,
                                                                    const SearchLimits& lim = {});

// Smallest simplex fixed setwise by every element of G, if any.
std::optional<Simplex> invariant_simplex(const SimplicialComplex& K, const AutomorphismGroup& G);

// Levels of K and its weighted multiple, with the reduction implication
// (multiple n-collapsible forces K n-collapsible) asserted whenever both
// sides are known. For vertex-homogeneous non-evasive K the core must be
// non-evasive as well; core_non_evasive records that probe.
struct ReductionCheck {
  CollapseLevel weighted_level = CollapseLevel::unknown();
  CollapseLevel base_level = CollapseLevel::unknown();
  bool implication_checked = false;
  bool vertex_homogeneous = false;
  Tri core_non_evasive = Tri::Unknown;
};

ReductionCheck evasiveness_reduction_check(const SimplicialComplex& K, const std::vector<int>& F,
                                           const SearchLimits& lim = {});

}  // namespace shtop
