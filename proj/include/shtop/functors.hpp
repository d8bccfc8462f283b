#pragma once

#include <vector>

#include "shtop/complex.hpp"
#include "shtop/poset.hpp"

namespace shtop {

// Element i of the poset is simplices[i]; simplices sorted by (size, lex),
// ordered by inclusion. Labels join the vertex labels with '_'.
struct FacePosetResult {
  FinitePoset poset;
  std::vector<Simplex> simplices;
};

FacePosetResult face_poset(const SimplicialComplex& K);

// Vertex x is element x of X; facets are the maximal chains.
SimplicialComplex order_complex(const FinitePoset& X);

// Composites: K' and X'.
SimplicialComplex barycentric_complex(const SimplicialComplex& K);
FinitePoset barycentric_poset(const FinitePoset& X);

// σ ↦ f(σ) between face posets; f must be simplicial.
PosetMap induced_order_map(const SimplicialMap& f);

// x ↦ f(x) between order complexes; f must be order preserving.
SimplicialMap induced_simplicial_map(const PosetMap& f);

}  // namespace shtop
