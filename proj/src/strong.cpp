#include "shtop/strong.hpp"

#include <algorithm>
#include <set>

#include "shtop/canonical.hpp"

namespace shtop {

std::vector<std::pair<Vertex, Vertex>> dominated_vertices(const SimplicialComplex& K) {
  std::vector<Bits> masks;
  masks.reserve(K.facets.size());
  for (const auto& f : K.facets) masks.push_back(bits_of(K.n, f));
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < K.n; ++v) {
    Bits common(K.n);
    bool first = true;
    for (const auto& m : masks) {
      if (!m.test(v)) continue;
      if (first) {
        common = m;
        first = false;
      } else {
        common &= m;
      }
    }
    common.reset(v);
    for (Vertex w : common.members()) out.push_back({v, w});
  }
  return out;
}

bool is_minimal(const SimplicialComplex& K) { return dominated_vertices(K).empty(); }

CoreResult core(const SimplicialComplex& K) {
  CoreResult res{K, {}};
  for (;;) {
    auto dom = dominated_vertices(res.complex);
    if (dom.empty()) return res;
    auto [v, w] = dom.front();
    res.trace.moves.push_back(strong_delete(res.complex.labels[v], res.complex.labels[w]));
    res.complex = delete_vertex(res.complex, v);
  }
}

bool is_strong_collapsible(const SimplicialComplex& K) { return core(K).complex.n == 1; }

std::optional<MoveTrace> strong_collapses_to(const SimplicialComplex& K,
                                             const std::vector<Vertex>& keep_ids,
                                             const SearchLimits& lim) {
  std::vector<Vertex> target = keep_ids;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  if (target.empty()) throw EmptyComplexError("target subcomplex has no vertices");
  for (Vertex v : target)
    if (v < 0 || v >= K.n) throw UnknownVertexError("vertex id out of range");

  BudgetCounter budget(lim);
  std::set<std::vector<Vertex>> failed;
  std::vector<Move> moves;

  // State is the set of original vertex ids still alive.
  auto rec = [&](auto&& self, const std::vector<Vertex>& alive) -> bool {
    budget.charge();
    if (alive == target) return true;
    if (failed.count(alive)) return false;
    SimplicialComplex cur = full_subcomplex(K, alive);
    for (auto [v, w] : dominated_vertices(cur)) {
      Vertex ov = alive[v];
      if (std::binary_search(target.begin(), target.end(), ov)) continue;
      std::vector<Vertex> next;
      next.reserve(alive.size() - 1);
      for (Vertex u : alive)
        if (u != ov) next.push_back(u);
      moves.push_back(strong_delete(cur.labels[v], cur.labels[w]));
      if (self(self, next)) return true;
      moves.pop_back();
    }
    failed.insert(alive);
    return false;
  };

  std::vector<Vertex> all(K.n);
  for (int v = 0; v < K.n; ++v) all[v] = v;
  if (rec(rec, all)) return MoveTrace{moves};
  return std::nullopt;
}

std::optional<MoveTrace> strong_collapses_to(const SimplicialComplex& K, const SimplicialComplex& L,
                                             const SearchLimits& lim) {
  std::vector<Vertex> keep;
  keep.reserve(L.n);
  for (int v = 0; v < L.n; ++v) keep.push_back(K.vertex_by_label(L.labels[v]));
  SimplicialComplex full = full_subcomplex(K, keep);
  // Structural equality through the shared labels.
  std::set<std::vector<std::string>> lf, ff;
  for (const auto& f : L.facets) {
    std::vector<std::string> toks;
    for (Vertex v : f) toks.push_back(L.labels[v]);
    std::sort(toks.begin(), toks.end());
    lf.insert(toks);
  }
  for (const auto& f : full.facets) {
    std::vector<std::string> toks;
    for (Vertex v : f) toks.push_back(full.labels[v]);
    std::sort(toks.begin(), toks.end());
    ff.insert(toks);
  }
  if (lf != ff) throw MapMismatchError("target is not a full subcomplex of the source");
  return strong_collapses_to(K, keep, lim);
}

bool same_strong_homotopy_type(const SimplicialComplex& K, const SimplicialComplex& L,
                               const SearchLimits& lim) {
  return is_isomorphic(core(K).complex, core(L).complex, lim).has_value();
}

SimplicialMap domination_retraction(const SimplicialComplex& K, Vertex v, Vertex w) {
  if (v < 0 || v >= K.n || w < 0 || w >= K.n || v == w)
    throw InvalidWitnessError("need two distinct vertices of the complex");
  for (const auto& f : K.facets)
    if (std::binary_search(f.begin(), f.end(), v) && !std::binary_search(f.begin(), f.end(), w))
      throw InvalidWitnessError("vertex " + K.labels[v] + " is not dominated by " + K.labels[w]);
  SimplicialComplex D = delete_vertex(K, v);
  SimplicialMap r{K, D, std::vector<int>(K.n)};
  for (Vertex u = 0; u < K.n; ++u)
    r.vertex_map[u] = D.vertex_by_label(K.labels[u == v ? w : u]);
  return r;
}

}  // namespace shtop
