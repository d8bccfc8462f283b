#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "shtop/complex.hpp"
#include "shtop/poset.hpp"
#include "shtop/trace.hpp"

namespace shtop {

struct CollapseLevel {
  enum class Kind { Level, Evasive, Unknown };
  Kind kind = Kind::Unknown;
  int value = -1;  // set when kind == Level

  static CollapseLevel level(int n) { return {Kind::Level, n}; }
  static CollapseLevel evasive() { return {Kind::Evasive, -1}; }
  static CollapseLevel unknown() { return {Kind::Unknown, -1}; }
};

bool operator==(const CollapseLevel& a, const CollapseLevel& b);

// (σ, τ): σ lies in exactly one facet τ and has codimension 1 there.
// Sorted by (σ, τ).
std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K);

bool is_free_pair(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau);

// Removes σ and τ; vertices left in no simplex disappear.
SimplicialComplex elementary_collapse(const SimplicialComplex& K, const Simplex& sigma,
                                      const Simplex& tau);

struct CollapseSearchResult {
  Tri verdict = Tri::Unknown;
  std::optional<MoveTrace> trace;
};

// Collapsibility to a point: backtracking over free-face collapses, highest
// dimension first, memoizing failed states by canonical form.
CollapseSearchResult is_collapsible(const SimplicialComplex& K, const SearchLimits& lim = {});

// Exact-target variant; the target is named by labels shared with K, and
// failed states are memoized by labelled facet sets since identity matters.
std::optional<MoveTrace> collapses_to(const SimplicialComplex& K, const SimplicialComplex& L,
                                      const SearchLimits& lim = {});

// n = 0 is strong collapsibility; n+1 deletes vertices with n-collapsible
// links. A single point is n-collapsible for every n.
Tri n_collapsible(const SimplicialComplex& K, int n, const SearchLimits& lim = {});

// Deletion order certifying n_collapsible, as NE moves at level n.
std::optional<MoveTrace> n_collapse_trace(const SimplicialComplex& K, int n,
                                          const SearchLimits& lim = {});

// Smallest n with n_collapsible(K, n); probing stops at max(0, dim-1),
// which suffices for every non-evasive complex.
CollapseLevel collapse_level(const SimplicialComplex& K, const SearchLimits& lim = {});

// Classical recursion: some vertex has a non-evasive link and a non-evasive
// deletion. A vertex with an empty link never qualifies.
Tri non_evasive(const SimplicialComplex& K, const SearchLimits& lim = {});

// Deletion order of vertices with non-evasive links down to the full
// subcomplex on keep_ids; each move records 1 + the link's collapse level.
std::optional<MoveTrace> ne_collapses_to(const SimplicialComplex& K,
                                         const std::vector<Vertex>& keep_ids,
                                         const SearchLimits& lim = {});

// Strong collapses refine classical ones: each deletion of a vertex v
// dominated by w expands into free-face collapses pairing σ with σ ∪ {w}
// through the deleted star, top dimension first.
MoveTrace expand_strong_trace(const SimplicialComplex& K, const MoveTrace& strong);

struct WelkerResult {
  SimplicialComplex k_prime;       // barycentric subdivision of the source
  SimplicialComplex l_prime;       // subdivision of the collapse target
  MoveTrace face_poset_trace;      // beat/weak removals on the face poset
  MoveTrace one_collapse;          // NE level-1 deletions on k_prime
};

// Carries a classical collapse K ⇘ L through the face poset to a 1-collapse
// of the subdivision K' ⇘¹ L'.
WelkerResult welker_pipeline_from_trace(const SimplicialComplex& K, const MoveTrace& collapse);

// Finds the collapse first (point target uses the plain search).
std::optional<WelkerResult> welker_pipeline(const SimplicialComplex& K, const SimplicialComplex& L,
                                            const SearchLimits& lim = {});

// Byte cap for the shared (canonical form, level) verdict cache.
void set_collapse_cache_bytes(size_t bytes);

}  // namespace shtop
