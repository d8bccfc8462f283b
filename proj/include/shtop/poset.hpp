#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shtop/base.hpp"
#include "shtop/trace.hpp"

namespace shtop {

// Strict order stored both ways round; labels are unique tokens.
// n == 0 is the empty subspace, which some link computations produce.
struct FinitePoset {
  int n = 0;
  std::vector<Bits> below;  // below[x] = {y : y < x}
  std::vector<Bits> above;  // above[x] = {y : x < y}
  std::vector<std::string> labels;

  bool less(int x, int y) const { return above[x].test(y); }
  const std::string& label(int x) const;
  int element_by_label(const std::string& tok) const;
};

bool operator==(const FinitePoset& a, const FinitePoset& b);
inline bool operator!=(const FinitePoset& a, const FinitePoset& b) { return !(a == b); }

// Closes the given strict relations transitively; a cycle is an error.
FinitePoset make_poset(int n, const std::vector<std::pair<int, int>>& less_pairs,
                       std::vector<std::string> labels = {});

// Induced suborder; kept elements are renamed densely in id order,
// labels carry over.
FinitePoset subposet(const FinitePoset& X, const std::vector<int>& keep);

std::vector<int> up_set(const FinitePoset& X, int x);
std::vector<int> down_set(const FinitePoset& X, int x);

// All elements comparable with x, as an induced subposet (possibly empty).
FinitePoset link_hat(const FinitePoset& X, int x);

std::vector<int> covers_up(const FinitePoset& X, int x);
std::vector<int> covers_down(const FinitePoset& X, int x);

// (element, side of its unique cover), sorted by element then Down < Up.
std::vector<std::pair<int, BeatDir>> beat_points(const FinitePoset& X);

struct PosetCoreResult {
  FinitePoset core;
  MoveTrace trace;
};

// Greedy removal of the smallest beat point until none is left.
PosetCoreResult poset_core(const FinitePoset& X);

bool is_contractible(const FinitePoset& X);

// Elements whose punctured comparability link is non-empty and contractible.
std::vector<int> weak_points(const FinitePoset& X);

struct PosetCollapseResult {
  Tri verdict = Tri::Unknown;
  std::optional<MoveTrace> trace;
};

// Backtracking over weak-point removals; memo keyed by canonical form
// holds failed states only, so found traces replay exactly.
PosetCollapseResult poset_collapses_to_point(const FinitePoset& X, const SearchLimits& lim = {});

Tri poset_non_evasive(const FinitePoset& X, const SearchLimits& lim = {});

// Greedy deletion of beat points outside the kept set; reaches the target
// whenever it is reachable at all, so no backtracking is needed.
std::optional<MoveTrace> poset_strong_collapses_to(const FinitePoset& X,
                                                   const std::vector<int>& keep);

// Backtracking removal of elements with non-evasive punctured links until
// only the kept set remains.
std::optional<MoveTrace> poset_ne_collapses_to(const FinitePoset& X, const std::vector<int>& keep,
                                               const SearchLimits& lim = {});

struct PosetMap {
  FinitePoset source;
  FinitePoset target;
  std::vector<int> element_map;
};

PosetMap identity_poset_map(const FinitePoset& X);
bool is_order_preserving(const PosetMap& f);
PosetMap compose(const PosetMap& g, const PosetMap& f);

// f ≤ h or h ≤ f pointwise.
bool comparable_maps(const PosetMap& f, const PosetMap& g);

// Breadth-first search through order-preserving maps, stepping one element
// at a time along cover edges; complete for homotopy of maps.
Tri are_homotopic(const PosetMap& f, const PosetMap& g, const SearchLimits& lim = {});

// The witnessing chain f = h0, h1, ..., hk = g where consecutive maps differ
// in a single element by a cover step.
std::optional<std::vector<PosetMap>> homotopy_chain(const PosetMap& f, const PosetMap& g,
                                                    const SearchLimits& lim = {});

std::optional<PosetMap> are_homeomorphic(const FinitePoset& X, const FinitePoset& Y,
                                         const SearchLimits& lim = {});

std::string to_string(const FinitePoset& X);

}  // namespace shtop
