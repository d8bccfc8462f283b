#pragma once

// Shared fixtures for the test binaries. Complexes are built through the
// text parser so the tests exercise the same entry points as the CLI; the
// poset enumerator is the exhaustive backbone of the subdivision and
// collapse equivalence suites.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shtop/canonical.hpp"
#include "shtop/complex.hpp"
#include "shtop/io.hpp"
#include "shtop/poset.hpp"

namespace tu {

inline shtop::SimplicialComplex cx(const std::string& text) { return shtop::parse_complex(text); }

inline shtop::Simplex sx(const shtop::SimplicialComplex& K, const std::vector<std::string>& toks) {
  return shtop::simplex_by_labels(K, toks);
}

// Δⁿ on n+1 vertices v0..vn.
inline shtop::SimplicialComplex simplex_n(int n) {
  std::string line = "facet";
  for (int i = 0; i <= n; ++i) line += " v" + std::to_string(i);
  return cx(line + "\n");
}

// ∂Δⁿ: all codimension-one faces of the (n+1)-vertex simplex.
inline shtop::SimplicialComplex boundary_n(int n) {
  std::string text;
  for (int skip = 0; skip <= n; ++skip) {
    text += "facet";
    for (int i = 0; i <= n; ++i)
      if (i != skip) text += " v" + std::to_string(i);
    text += "\n";
  }
  return cx(text);
}

inline shtop::SimplicialComplex s0() { return cx("facet a\nfacet b\n"); }

// m-gon as a 1-complex, m >= 3.
inline shtop::SimplicialComplex cycle_c(int m) {
  std::string text;
  for (int i = 0; i < m; ++i)
    text += "facet v" + std::to_string(i) + " v" + std::to_string((i + 1) % m) + "\n";
  return cx(text);
}

inline shtop::SimplicialComplex path_c(int edges) {
  std::string text;
  for (int i = 0; i < edges; ++i)
    text += "facet v" + std::to_string(i) + " v" + std::to_string(i + 1) + "\n";
  return cx(text);
}

// S⁰*S⁰*S⁰ on pairs {a,ap},{b,bp},{c,cp}; 8 triangles.
inline shtop::SimplicialComplex octahedron() {
  std::string text;
  for (const char* x : {"a", "ap"})
    for (const char* y : {"b", "bp"})
      for (const char* z : {"c", "cp"})
        text += std::string("facet ") + x + " " + y + " " + z + "\n";
  return cx(text);
}

// The octahedron with the facet {a,b,c} removed: minimal, collapsible,
// not strong collapsible.
inline shtop::SimplicialComplex oct_minus() {
  std::string text;
  for (const char* x : {"a", "ap"})
    for (const char* y : {"b", "bp"})
      for (const char* z : {"c", "cp"}) {
        if (std::string(x) == "a" && std::string(y) == "b" && std::string(z) == "c") continue;
        text += std::string("facet ") + x + " " + y + " " + z + "\n";
      }
  return cx(text);
}

// S⁰*S⁰*S⁰*S⁰ minus the facet {a,b,c,d}; 15 tetrahedra on 8 vertices.
inline shtop::SimplicialComplex s4_minus() {
  std::string text;
  for (const char* x : {"a", "ap"})
    for (const char* y : {"b", "bp"})
      for (const char* z : {"c", "cp"})
        for (const char* w : {"d", "dp"}) {
          if (std::string(x) == "a" && std::string(y) == "b" && std::string(z) == "c" &&
              std::string(w) == "d")
            continue;
          text += std::string("facet ") + x + " " + y + " " + z + " " + w + "\n";
        }
  return cx(text);
}

inline shtop::FinitePoset chain_p(int n) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.push_back({i, i + 1});
  return shtop::make_poset(n, rels);
}

inline shtop::FinitePoset antichain_p(int n) { return shtop::make_poset(n, {}); }

// a < c, b < c.
inline shtop::FinitePoset vee_p() { return shtop::make_poset(3, {{0, 2}, {1, 2}}); }

// Every poset on k+1 elements is some poset on k elements plus a maximal
// element whose strict down-set is a down-closed subset, so extending every
// class by every down-set and deduplicating by canonical form enumerates all
// isomorphism classes. Sizes follow 1, 2, 5, 16, 63, 318, 2045.
inline std::vector<std::vector<shtop::FinitePoset>> all_posets(int max_n) {
  std::vector<std::vector<shtop::FinitePoset>> by_size;
  by_size.push_back({shtop::make_poset(1, {})});
  for (int n = 2; n <= max_n; ++n) {
    std::vector<shtop::FinitePoset> next;
    std::set<std::string> seen;
    for (const auto& P : by_size.back()) {
      int k = P.n;
      for (int mask = 0; mask < (1 << k); ++mask) {
        bool down_closed = true;
        for (int x = 0; x < k && down_closed; ++x)
          if (mask & (1 << x))
            for (int y : shtop::down_set(P, x))
              if (!(mask & (1 << y))) {
                down_closed = false;
                break;
              }
        if (!down_closed) continue;
        std::vector<std::pair<int, int>> rels;
        for (int x = 0; x < k; ++x)
          for (int y : shtop::up_set(P, x)) rels.push_back({x, y});
        for (int x = 0; x < k; ++x)
          if (mask & (1 << x)) rels.push_back({x, k});
        shtop::FinitePoset Q = shtop::make_poset(k + 1, rels);
        std::string key = shtop::canonical_form(Q);
        if (seen.insert(key).second) next.push_back(Q);
      }
    }
    by_size.push_back(std::move(next));
  }
  return by_size;
}

}  // namespace tu
