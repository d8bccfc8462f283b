#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shtop/base.hpp"

namespace shtop {

using Vertex = int;

// Sorted vector of distinct vertex ids.
using Simplex = std::vector<Vertex>;

// Facet-only representation: facets form an antichain sorted by (size, lex),
// every id in 0..n-1 lies in at least one facet, labels are unique tokens.
struct SimplicialComplex {
  int n = 0;
  std::vector<Simplex> facets;
  std::vector<std::string> labels;

  int dim() const;
  const std::string& label(Vertex v) const;
  Vertex vertex_by_label(const std::string& tok) const;
};

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);
inline bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) { return !(a == b); }

// (size, lex) order; ties broken by vertex ids.
bool simplex_lt(const Simplex& a, const Simplex& b);

bool is_face_of(const Simplex& s, const Simplex& t);

std::vector<Simplex> prune_to_maximal(std::vector<Simplex> faces);

// Normalizes facets (sort, dedupe, prune) and checks the representation
// invariants. Empty label list generates v0..v{n-1}.
SimplicialComplex make_complex(int n, std::vector<Simplex> facets,
                               std::vector<std::string> labels = {});

// Renames the vertices that actually occur to the dense range 0..k-1,
// preserving relative id order, and carries their labels over.
SimplicialComplex compact_complex(int old_n, const std::vector<Simplex>& facets,
                                  const std::vector<std::string>& old_labels);

bool has_simplex(const SimplicialComplex& K, const Simplex& s);

// Indices into K.facets of the facets containing v.
std::vector<int> facets_with(const SimplicialComplex& K, Vertex v);

// nullopt is the empty-complex marker: v lies only in the 0-dimensional
// facet {v}. Downstream predicates treat it as not a cone, not collapsible.
std::optional<SimplicialComplex> link(const SimplicialComplex& K, Vertex v);

// Full subcomplex on the other vertices; isolated leftovers are kept as
// 0-dimensional facets. Deleting the only vertex is an error.
SimplicialComplex delete_vertex(const SimplicialComplex& K, Vertex v);

SimplicialComplex star(const SimplicialComplex& K, Vertex v);

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& keep);

// Disjoint-union relabelling, then facets F ∪ G. Label clashes get a
// numeric suffix on the right factor.
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

// Facets F ⊔ G on the shifted vertex set, no mixed facets.
SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L);

// Smallest vertex lying in every facet, if any.
std::optional<Vertex> cone_apex(const SimplicialComplex& K);

// Every simplex of K (each non-empty subset of a facet), sorted by (size, lex).
std::vector<Simplex> all_simplices(const SimplicialComplex& K);

// Sorted vertex ids for a list of labels; duplicates are an error.
Simplex simplex_by_labels(const SimplicialComplex& K, const std::vector<std::string>& toks);

struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<Vertex> vertex_map;
};

SimplicialMap identity_map(const SimplicialComplex& K);

Simplex map_simplex(const SimplicialMap& f, const Simplex& s);

// Vertex map sends every simplex to a simplex of the target.
bool is_simplicial(const SimplicialMap& f);

// g after f; requires f.target == g.source.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

// Matches sub's vertices into sup by label.
SimplicialMap inclusion_map(const SimplicialComplex& sub, const SimplicialComplex& sup);

// f(s) ∪ g(s) spans a simplex for every facet s. The maps must share
// source and target.
bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g);

std::string to_string(const SimplicialComplex& K);

}  // namespace shtop
