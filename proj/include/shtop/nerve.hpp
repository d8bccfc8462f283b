#pragma once

#include <vector>

#include "shtop/complex.hpp"
#include "shtop/strong.hpp"

namespace shtop {

// Vertex i of the nerve is facet i of K; facets are the maximal families
// with non-empty total intersection, which are exactly the maximal vertex
// stars. Vertex count equals the facet count of K.
SimplicialComplex nerve(const SimplicialComplex& K);

// [K, N(K), N²(K), ...]; stops at a one-vertex entry, when two consecutive
// even entries are isomorphic, or after max_steps applications.
std::vector<SimplicialComplex> nerve_tower(const SimplicialComplex& K, int max_steps = 64,
                                           const SearchLimits& lim = {});

struct SquareNerveEmbedding {
  SimplicialMap map;          // N²(K) -> K, injective on vertices
  SimplicialComplex image;    // full subcomplex of K on the image vertices
  MoveTrace trace;            // strong collapse of K onto the image
};

// Picks, for each maximal family, the smallest non-dominated vertex of its
// total intersection (falling back to the smallest). On a minimal complex
// the image is everything and the trace is empty.
SquareNerveEmbedding embed_square_nerve(const SimplicialComplex& K);

// Iterates K -> N²(K) until the vertex count stabilizes; the fixed point is
// cross-checked against the greedy core.
SimplicialComplex core_via_nerve(const SimplicialComplex& K, const SearchLimits& lim = {});

// True iff the nerve tower reaches a one-vertex complex.
bool strong_collapsible_via_nerve(const SimplicialComplex& K, const SearchLimits& lim = {});

}  // namespace shtop
