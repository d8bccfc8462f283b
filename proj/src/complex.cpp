#include "shtop/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace shtop {

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& f : facets) d = std::max(d, (int)f.size() - 1);
  return d;
}

const std::string& SimplicialComplex::label(Vertex v) const {
  if (v < 0 || v >= n) throw UnknownVertexError("vertex id out of range");
  return labels[v];
}

Vertex SimplicialComplex::vertex_by_label(const std::string& tok) const {
  for (int v = 0; v < n; ++v)
    if (labels[v] == tok) return v;
  throw UnknownVertexError("no vertex labelled '" + tok + "'");
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
  return a.n == b.n && a.facets == b.facets;
}

bool simplex_lt(const Simplex& a, const Simplex& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_face_of(const Simplex& s, const Simplex& t) {
  return std::includes(t.begin(), t.end(), s.begin(), s.end());
}

std::vector<Simplex> prune_to_maximal(std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end(), simplex_lt);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Simplex> out;
  for (size_t i = 0; i < faces.size(); ++i) {
    bool dominated = false;
    for (size_t j = i + 1; j < faces.size() && !dominated; ++j)
      if (faces[j].size() > faces[i].size() && is_face_of(faces[i], faces[j])) dominated = true;
    if (!dominated) out.push_back(faces[i]);
  }
  return out;
}

static void normalize_facet(Simplex& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

SimplicialComplex make_complex(int n, std::vector<Simplex> facets, std::vector<std::string> labels) {
  if (n <= 0) throw EmptyComplexError("complex needs at least one vertex");
  for (auto& f : facets) {
    if (f.empty()) throw Error("empty facet");
    normalize_facet(f);
    if (f.front() < 0 || f.back() >= n) throw UnknownVertexError("facet vertex out of range");
  }
  facets = prune_to_maximal(std::move(facets));
  if (facets.empty()) throw EmptyComplexError("complex needs at least one facet");
  std::vector<char> seen(n, 0);
  for (const auto& f : facets)
    for (Vertex v : f) seen[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw Error("vertex " + std::to_string(v) + " lies in no facet");
  if (labels.empty()) {
    labels.reserve(n);
    for (int v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v));
  }
  if ((int)labels.size() != n) throw Error("label count does not match vertex count");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if ((int)uniq.size() != n) throw Error("duplicate vertex labels");
  SimplicialComplex K;
  K.n = n;
  K.facets = std::move(facets);
  K.labels = std::move(labels);
  return K;
}

SimplicialComplex compact_complex(int old_n, const std::vector<Simplex>& facets,
                                  const std::vector<std::string>& old_labels) {
  std::vector<int> new_id(old_n, -1);
  for (const auto& f : facets)
    for (Vertex v : f) new_id[v] = 0;
  int k = 0;
  for (int v = 0; v < old_n; ++v)
    if (new_id[v] == 0) new_id[v] = k++;
    else new_id[v] = -1;
  std::vector<Simplex> out;
  out.reserve(facets.size());
  for (const auto& f : facets) {
    Simplex g;
    g.reserve(f.size());
    for (Vertex v : f) g.push_back(new_id[v]);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::vector<std::string> labels(k);
  for (int v = 0; v < old_n; ++v)
    if (new_id[v] >= 0)
      labels[new_id[v]] = old_labels.empty() ? "v" + std::to_string(v) : old_labels[v];
  return make_complex(k, std::move(out), std::move(labels));
}

bool has_simplex(const SimplicialComplex& K, const Simplex& s) {
  for (const auto& f : K.facets)
    if (is_face_of(s, f)) return true;
  return false;
}

std::vector<int> facets_with(const SimplicialComplex& K, Vertex v) {
  if (v < 0 || v >= K.n) throw UnknownVertexError("vertex id out of range");
  std::vector<int> out;
  for (int i = 0; i < (int)K.facets.size(); ++i)
    if (std::binary_search(K.facets[i].begin(), K.facets[i].end(), v)) out.push_back(i);
  return out;
}

std::optional<SimplicialComplex> link(const SimplicialComplex& K, Vertex v) {
  auto idx = facets_with(K, v);
  std::vector<Simplex> faces;
  for (int i : idx) {
    Simplex g;
    for (Vertex w : K.facets[i])
      if (w != v) g.push_back(w);
    if (!g.empty()) faces.push_back(std::move(g));
  }
  if (faces.empty()) return std::nullopt;
  // Facets of K containing v form an antichain, so their v-deleted images do too.
  return compact_complex(K.n, faces, K.labels);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, const std::vector<Vertex>& keep) {
  Bits mask(K.n);
  for (Vertex v : keep) {
    if (v < 0 || v >= K.n) throw UnknownVertexError("vertex id out of range");
    mask.set(v);
  }
  std::vector<Simplex> faces;
  for (const auto& f : K.facets) {
    Simplex g;
    for (Vertex v : f)
      if (mask.test(v)) g.push_back(v);
    if (!g.empty()) faces.push_back(std::move(g));
  }
  if (faces.empty()) throw EmptyComplexError("no vertex of the subcomplex lies in any facet");
  return compact_complex(K.n, prune_to_maximal(std::move(faces)), K.labels);
}

SimplicialComplex delete_vertex(const SimplicialComplex& K, Vertex v) {
  if (v < 0 || v >= K.n) throw UnknownVertexError("vertex id out of range");
  if (K.n == 1) throw LastVertexError("cannot delete the only vertex");
  std::vector<Vertex> keep;
  keep.reserve(K.n - 1);
  for (Vertex w = 0; w < K.n; ++w)
    if (w != v) keep.push_back(w);
  return full_subcomplex(K, keep);
}

SimplicialComplex star(const SimplicialComplex& K, Vertex v) {
  auto idx = facets_with(K, v);
  std::vector<Simplex> faces;
  for (int i : idx) faces.push_back(K.facets[i]);
  return compact_complex(K.n, faces, K.labels);
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  std::vector<Simplex> faces;
  faces.reserve(K.facets.size() * L.facets.size());
  for (const auto& f : K.facets)
    for (const auto& g : L.facets) {
      Simplex h = f;
      for (Vertex v : g) h.push_back(v + K.n);
      faces.push_back(std::move(h));
    }
  std::set<std::string> used(K.labels.begin(), K.labels.end());
  std::vector<std::string> labels = K.labels;
  for (const auto& l : L.labels) {
    std::string cand = l;
    for (int suffix = 2; used.count(cand); ++suffix) cand = l + "_" + std::to_string(suffix);
    used.insert(cand);
    labels.push_back(cand);
  }
  return make_complex(K.n + L.n, std::move(faces), std::move(labels));
}

SimplicialComplex disjoint_union(const SimplicialComplex& K, const SimplicialComplex& L) {
  std::vector<Simplex> faces = K.facets;
  for (const auto& g : L.facets) {
    Simplex h;
    h.reserve(g.size());
    for (Vertex v : g) h.push_back(v + K.n);
    faces.push_back(std::move(h));
  }
  std::set<std::string> used(K.labels.begin(), K.labels.end());
  std::vector<std::string> labels = K.labels;
  for (const auto& l : L.labels) {
    std::string cand = l;
    for (int suffix = 2; used.count(cand); ++suffix) cand = l + "_" + std::to_string(suffix);
    used.insert(cand);
    labels.push_back(cand);
  }
  return make_complex(K.n + L.n, std::move(faces), std::move(labels));
}

std::optional<Vertex> cone_apex(const SimplicialComplex& K) {
  Bits common(K.n);
  for (Vertex v : K.facets[0]) common.set(v);
  for (const auto& f : K.facets) {
    Bits m(K.n);
    for (Vertex v : f) m.set(v);
    common &= m;
  }
  for (int v = 0; v < K.n; ++v)
    if (common.test(v)) return v;
  return std::nullopt;
}

std::vector<Simplex> all_simplices(const SimplicialComplex& K) {
  std::set<Simplex> seen;
  for (const auto& f : K.facets) {
    const int m = (int)f.size();
    for (unsigned sub = 1; sub < (1u << m); ++sub) {
      Simplex s;
      for (int i = 0; i < m; ++i)
        if (sub & (1u << i)) s.push_back(f[i]);
      seen.insert(std::move(s));
    }
  }
  std::vector<Simplex> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), simplex_lt);
  return out;
}

Simplex simplex_by_labels(const SimplicialComplex& K, const std::vector<std::string>& toks) {
  Simplex s;
  s.reserve(toks.size());
  for (const auto& t : toks) s.push_back(K.vertex_by_label(t));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error("repeated vertex in simplex");
  return s;
}

SimplicialMap identity_map(const SimplicialComplex& K) {
  SimplicialMap f{K, K, {}};
  f.vertex_map.resize(K.n);
  for (int v = 0; v < K.n; ++v) f.vertex_map[v] = v;
  return f;
}

Simplex map_simplex(const SimplicialMap& f, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (Vertex v : s) {
    if (v < 0 || v >= f.source.n) throw UnknownVertexError("vertex id out of range");
    out.push_back(f.vertex_map[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_simplicial(const SimplicialMap& f) {
  if ((int)f.vertex_map.size() != f.source.n) return false;
  for (Vertex w : f.vertex_map)
    if (w < 0 || w >= f.target.n) return false;
  for (const auto& fac : f.source.facets)
    if (!has_simplex(f.target, map_simplex(f, fac))) return false;
  return true;
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (f.target != g.source) throw MapMismatchError("compose: middle complexes differ");
  SimplicialMap h{f.source, g.target, {}};
  h.vertex_map.reserve(f.source.n);
  for (Vertex v = 0; v < f.source.n; ++v) h.vertex_map.push_back(g.vertex_map[f.vertex_map[v]]);
  return h;
}

SimplicialMap inclusion_map(const SimplicialComplex& sub, const SimplicialComplex& sup) {
  SimplicialMap f{sub, sup, {}};
  f.vertex_map.reserve(sub.n);
  for (Vertex v = 0; v < sub.n; ++v) f.vertex_map.push_back(sup.vertex_by_label(sub.labels[v]));
  if (!is_simplicial(f)) throw InvalidMapError("label-matched inclusion is not simplicial");
  return f;
}

bool are_contiguous(const SimplicialMap& f, const SimplicialMap& g) {
  if (f.source != g.source || f.target != g.target)
    throw MapMismatchError("contiguity needs a common source and target");
  if (!is_simplicial(f) || !is_simplicial(g)) throw InvalidMapError("map is not simplicial");
  for (const auto& fac : f.source.facets) {
    Simplex a = map_simplex(f, fac);
    Simplex b = map_simplex(g, fac);
    Simplex u;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
    if (!has_simplex(f.target, u)) return false;
  }
  return true;
}

std::string to_string(const SimplicialComplex& K) {
  std::ostringstream os;
  os << K.n << " vertices {";
  for (size_t i = 0; i < K.facets.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (size_t j = 0; j < K.facets[i].size(); ++j) {
      if (j) os << " ";
      os << K.labels[K.facets[i][j]];
    }
    os << ")";
  }
  os << "}";
  return os.str();
}

}  // namespace shtop
