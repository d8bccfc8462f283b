#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shtop/complex.hpp"
#include "shtop/trace.hpp"

namespace shtop {

// All pairs (v, w) where every facet containing v also contains w, w != v;
// sorted by (v, w).
std::vector<std::pair<Vertex, Vertex>> dominated_vertices(const SimplicialComplex& K);

bool is_minimal(const SimplicialComplex& K);

struct CoreResult {
  SimplicialComplex complex;
  MoveTrace trace;
};

// Greedy deletion of the smallest dominated vertex (smallest witness).
// The result is minimal and independent of deletion order up to isomorphism.
CoreResult core(const SimplicialComplex& K);

bool is_strong_collapsible(const SimplicialComplex& K);

// Backtracking search for a dominated-vertex deletion order from K down to
// exactly the full subcomplex on keep_ids. Order can matter here, so failed
// vertex-set states are memoized.
std::optional<MoveTrace> strong_collapses_to(const SimplicialComplex& K,
                                             const std::vector<Vertex>& keep_ids,
                                             const SearchLimits& lim = {});

// Same, target given as a complex whose labels name vertices of K.
std::optional<MoveTrace> strong_collapses_to(const SimplicialComplex& K,
                                             const SimplicialComplex& L,
                                             const SearchLimits& lim = {});

bool same_strong_homotopy_type(const SimplicialComplex& K, const SimplicialComplex& L,
                               const SearchLimits& lim = {});

// r: K -> K∖v fixing everything and sending v to its dominator w.
SimplicialMap domination_retraction(const SimplicialComplex& K, Vertex v, Vertex w);

}  // namespace shtop
