#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shtop/base.hpp"
#include "shtop/complex.hpp"
#include "shtop/poset.hpp"
#include "shtop/strong.hpp"
#include "shtop/trace.hpp"

namespace shtop {

enum class GenMode { UniformFacets, GrownByDomination, GrownByBeatPoints };

struct GeneratorConfig {
  uint64_t seed = 0;
  int max_vertices = 8;
  int max_facets = 12;
  std::pair<int, int> facet_size_range = {1, 4};
  GenMode mode = GenMode::UniformFacets;
};

// mt19937_64 with explicit reductions; identical sequences on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  int below(int n);
  int between(int lo, int hi);
  bool chance(double p);

 private:
  std::mt19937_64 eng_;
};

SimplicialComplex gen_complex(const GeneratorConfig& cfg);
FinitePoset gen_poset(const GeneratorConfig& cfg);

// Each step attaches a fresh vertex over a random facet subset at an existing
// vertex, so the result strong collapses back onto K.
SimplicialComplex grow_by_domination(const SimplicialComplex& K, int steps, Rng& rng);

// Each step hangs a fresh element under or over a random existing one; the
// result is contractible whenever X is.
FinitePoset grow_by_beat_points(const FinitePoset& X, int steps, Rng& rng);

// Deterministic family of complexes with vertex-transitive symmetry, capped
// at max_vertices: simplices, facet boundaries, cycles, iterated two-point
// joins, clone multiples, disjoint unions of isomorphic pieces.
std::vector<SimplicialComplex> vh_instances(int max_vertices);

// Core reached through uniformly random dominated-vertex deletions.
CoreResult random_core(const SimplicialComplex& K, Rng& rng);

using TraceObject = std::variant<SimplicialComplex, FinitePoset>;

struct TraceVerdict {
  bool ok = false;
  int failing_move = -1;  // moves.size() marks an end-object mismatch
  bool budget_starved = false;
  std::string reason;
};

// Replays each move, checking its side condition against the current object,
// then compares the final object with the declared end up to isomorphism.
TraceVerdict verify_trace(const TraceObject& start, const MoveTrace& trace, const TraceObject& end,
                          const SearchLimits& lim = {});

// Exhaustive deletion-sequence search, no memoization; test oracle only.
bool brute_force_strong_collapsible(const SimplicialComplex& K);

// Random elementary expansions from a point, steered so every vertex link
// becomes a connected graph holding a cycle; tree links are exactly the
// strong collapsible ones, so such a complex blocks every deletion order at
// the first step while the reversed expansion list stays a collapse
// certificate. Returns the first steered complex the link recursion rejects.
struct ExpansionWitness {
  SimplicialComplex complex;
  MoveTrace collapse;
};
std::optional<ExpansionWitness> search_collapsible_evasive(uint64_t seed, int tries,
                                                           int max_vertices,
                                                           const SearchLimits& lim = {});

// Random posets and face posets of randomly grown collapsible complexes,
// reduced to their cores; returns a core with more than one element that
// still admits a weak-point collapse, with its trace.
std::optional<std::pair<FinitePoset, MoveTrace>> search_minimal_collapsible_poset(
    uint64_t seed, int tries, int max_elements, const SearchLimits& lim = {});

}  // namespace shtop
