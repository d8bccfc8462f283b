#include "shtop/symmetry.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "shtop/canonical.hpp"
#include "shtop/nerve.hpp"
#include "shtop/strong.hpp"

namespace shtop {

namespace {

// Iterated color refinement; permutation search only pairs same-colored vertices.
std::vector<int> stable_colors(const SimplicialComplex& K) {
  std::vector<int> color(K.n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::vector<int>> fsig;
    fsig.reserve(K.facets.size());
    for (const auto& f : K.facets) {
      std::vector<int> s;
      s.reserve(f.size());
      for (Vertex v : f) s.push_back(color[v]);
      std::sort(s.begin(), s.end());
      fsig.push_back(std::move(s));
    }
    std::map<std::vector<int>, int> frank;
    for (const auto& s : fsig) frank.emplace(s, (int)frank.size());
    std::vector<std::pair<std::vector<int>, int>> vsig(K.n);
    for (Vertex v = 0; v < K.n; ++v) vsig[v].first.push_back(color[v]);
    for (size_t i = 0; i < K.facets.size(); ++i)
      for (Vertex v : K.facets[i]) vsig[v].first.push_back(frank.find(fsig[i])->second + K.n);
    for (Vertex v = 0; v < K.n; ++v) {
      std::sort(vsig[v].first.begin() + 1, vsig[v].first.end());
      vsig[v].second = v;
    }
    std::map<std::vector<int>, int> vrank;
    for (const auto& [s, v] : vsig) vrank.emplace(s, (int)vrank.size());
    int next_classes = (int)vrank.size();
    for (const auto& [s, v] : vsig) color[v] = vrank.find(s)->second;
    if (next_classes == classes) return color;
    classes = next_classes;
  }
}

struct AutSearch {
  const SimplicialComplex& K;
  std::vector<int> color;
  std::set<Simplex> facet_set;
  std::vector<std::vector<int>> facets_by_max;
  std::vector<Vertex> image;
  std::vector<bool> used;
  std::vector<std::vector<Vertex>> found;
  BudgetCounter budget;

  AutSearch(const SimplicialComplex& k, const SearchLimits& lim)
      : K(k), color(stable_colors(k)), facets_by_max(k.n), budget(lim) {
    for (size_t i = 0; i < K.facets.size(); ++i) {
      facet_set.insert(K.facets[i]);
      facets_by_max[K.facets[i].back()].push_back((int)i);
    }
    image.assign(K.n, -1);
    used.assign(K.n, false);
  }

  bool consistent_at(Vertex d) {
    for (int i : facets_by_max[d]) {
      Simplex m;
      m.reserve(K.facets[i].size());
      for (Vertex v : K.facets[i]) m.push_back(image[v]);
      std::sort(m.begin(), m.end());
      if (!facet_set.count(m)) return false;
    }
    return true;
  }

  void dfs(Vertex d) {
    budget.charge();
    if (d == K.n) {
      found.push_back(image);
      return;
    }
    for (Vertex x = 0; x < K.n; ++x) {
      if (used[x] || color[x] != color[d]) continue;
      image[d] = x;
      used[x] = true;
      if (consistent_at(d)) dfs(d + 1);
      used[x] = false;
      image[d] = -1;
    }
  }
};

}  // namespace

AutomorphismGroup automorphisms(const SimplicialComplex& K, const SearchLimits& lim) {
  AutSearch s(K, lim);
  s.dfs(0);
  std::sort(s.found.begin(), s.found.end());
  return {std::move(s.found)};
}

std::vector<Vertex> vertex_orbit(const AutomorphismGroup& G, Vertex v) {
  std::set<Vertex> orb;
  for (const auto& g : G.elements) {
    if (v < 0 || v >= (Vertex)g.size()) throw UnknownVertexError("vertex id out of range");
    orb.insert(g[v]);
  }
  return {orb.begin(), orb.end()};
}

bool is_vertex_homogeneous(const SimplicialComplex& K, const SearchLimits& lim) {
  if (K.n == 1) return true;
  AutomorphismGroup G = automorphisms(K, lim);
  return (int)vertex_orbit(G, 0).size() == K.n;
}

DominationClasses domination_classes(const SimplicialComplex& K) {
  DominationClasses out;
  Bits all(K.n);
  for (Vertex v = 0; v < K.n; ++v) all.set(v);
  out.prec.assign(K.n, all);
  for (size_t i = 0; i < K.facets.size(); ++i) {
    Bits mask = bits_of(K.n, K.facets[i]);
    for (Vertex v : K.facets[i]) out.prec[v] &= mask;
  }
  out.symmetric = true;
  for (Vertex v = 0; v < K.n && out.symmetric; ++v)
    for (Vertex w : out.prec[v].members())
      if (!out.prec[w].test(v)) {
        out.symmetric = false;
        break;
      }
  std::vector<bool> seen(K.n, false);
  for (Vertex v = 0; v < K.n; ++v) {
    if (seen[v]) continue;
    std::vector<Vertex> cls;
    for (Vertex w : out.prec[v].members())
      if (out.prec[w].test(v)) {
        cls.push_back(w);
        seen[w] = true;
      }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

SimplicialComplex vh_core(const SimplicialComplex& K, const SearchLimits& lim) {
  if (!is_vertex_homogeneous(K, lim))
    throw NotVertexHomogeneousError("vh_core needs a vertex-homogeneous complex");
  DominationClasses dc = domination_classes(K);
  std::vector<Vertex> reps;
  reps.reserve(dc.classes.size());
  for (const auto& cls : dc.classes) reps.push_back(cls.front());
  std::sort(reps.begin(), reps.end());
  SimplicialComplex L = full_subcomplex(K, reps);
  if (!is_minimal(L)) throw Error("class representatives did not span a minimal complex");
  if (canonical_form(L) != canonical_form(core(K).complex))
    throw Error("class representatives disagree with the greedy core");
  if (canonical_form(L) != canonical_form(nerve(nerve(K))))
    throw Error("class representatives disagree with the double nerve");
  return L;
}

SimplicialComplex weighted_multiple(const SimplicialComplex& K, const std::vector<int>& F) {
  if ((int)F.size() != K.n) throw Error("one clone count per vertex required");
  std::vector<int> start(K.n + 1, 0);
  for (Vertex v = 0; v < K.n; ++v) {
    if (F[v] < 1) throw Error("clone counts must be positive");
    start[v + 1] = start[v] + F[v];
  }
  std::vector<std::string> labels(start[K.n]);
  for (Vertex v = 0; v < K.n; ++v)
    for (int i = 0; i < F[v]; ++i) labels[start[v] + i] = K.labels[v] + "_" + std::to_string(i + 1);
  std::vector<Simplex> facets;
  facets.reserve(K.facets.size());
  for (const auto& f : K.facets) {
    Simplex big;
    for (Vertex v : f)
      for (int i = 0; i < F[v]; ++i) big.push_back(start[v] + i);
    facets.push_back(std::move(big));
  }
  return make_complex(start[K.n], facets, labels);
}

SimplicialComplex multiple(const SimplicialComplex& K, int n) {
  if (n < 1) throw Error("multiples need n >= 1");
  return weighted_multiple(K, std::vector<int>(K.n, n));
}

std::optional<std::pair<SimplicialComplex, int>> factor_as_multiple(const SimplicialComplex& K,
                                                                    const SearchLimits& lim) {
  SimplicialComplex L = vh_core(K, lim);
  DominationClasses dc = domination_classes(K);
  int n = (int)dc.classes.front().size();
  for (const auto& cls : dc.classes)
    if ((int)cls.size() != n) throw Error("domination classes of unequal size");
  try {
    if (!is_isomorphic(K, multiple(L, n), lim))
      throw Error("complex is not a multiple of its core");
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
  return std::make_pair(std::move(L), n);
}

std::optional<Simplex> invariant_simplex(const SimplicialComplex& K, const AutomorphismGroup& G) {
  std::set<Simplex> facet_set(K.facets.begin(), K.facets.end());
  for (const auto& g : G.elements) {
    if ((int)g.size() != K.n) throw InvalidMapError("permutation degree mismatch");
    std::vector<bool> hit(K.n, false);
    for (Vertex x : g) {
      if (x < 0 || x >= K.n || hit[x]) throw InvalidMapError("not a vertex permutation");
      hit[x] = true;
    }
    for (const auto& f : K.facets) {
      Simplex m;
      for (Vertex v : f) m.push_back(g[v]);
      std::sort(m.begin(), m.end());
      if (!facet_set.count(m)) throw InvalidMapError("permutation does not preserve facets");
    }
  }
  for (const auto& s : all_simplices(K)) {
    bool fixed = true;
    for (const auto& g : G.elements) {
      Simplex m;
      for (Vertex v : s) m.push_back(g[v]);
      std::sort(m.begin(), m.end());
      if (m != s) {
        fixed = false;
        break;
      }
    }
    if (fixed) return s;
  }
  return std::nullopt;
}

ReductionCheck evasiveness_reduction_check(const SimplicialComplex& K, const std::vector<int>& F,
                                           const SearchLimits& lim) {
  ReductionCheck out;
  out.weighted_level = collapse_level(weighted_multiple(K, F), lim);
  out.base_level = collapse_level(K, lim);
  if (out.weighted_level.kind != CollapseLevel::Kind::Unknown &&
      out.base_level.kind != CollapseLevel::Kind::Unknown) {
    out.implication_checked = true;
    if (out.weighted_level.kind == CollapseLevel::Kind::Level) {
      if (out.base_level.kind != CollapseLevel::Kind::Level ||
          out.base_level.value > out.weighted_level.value)
        throw Error("weighted multiple collapses at a level its base does not");
    }
  }
  out.vertex_homogeneous = is_vertex_homogeneous(K, lim);
  if (out.vertex_homogeneous && out.base_level.kind == CollapseLevel::Kind::Level) {
    out.core_non_evasive = non_evasive(vh_core(K, lim), lim);
    if (out.core_non_evasive == Tri::False)
      throw Error("core of a non-evasive vertex-homogeneous complex came out evasive");
  }
  return out;
}

}  // namespace shtop
