#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shtop/base.hpp"
#include "shtop/complex.hpp"
#include "shtop/poset.hpp"

namespace shtop {

// order[old id] = canonical position. Equal keys iff isomorphic objects.
struct Canonical {
  std::string key;
  std::vector<int> order;
};

// Vertex-refinement (facet-size multisets, iterated with facet colour
// signatures) followed by individualisation branch-and-bound over the
// surviving cells. The node budget bounds the branch-and-bound tree.
Canonical canonicalize(const SimplicialComplex& K, const SearchLimits& lim = {});
Canonical canonicalize(const FinitePoset& X, const SearchLimits& lim = {});

std::string canonical_form(const SimplicialComplex& K, const SearchLimits& lim = {});
std::string canonical_form(const FinitePoset& X, const SearchLimits& lim = {});

// Vertex bijection realizing an isomorphism, via canonical orders.
std::optional<SimplicialMap> is_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L,
                                           const SearchLimits& lim = {});

}  // namespace shtop
