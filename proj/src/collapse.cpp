#include "shtop/collapse.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <mutex>
#include <set>

#include "shtop/canonical.hpp"
#include "shtop/functors.hpp"
#include "shtop/strong.hpp"

namespace shtop {

bool operator==(const CollapseLevel& a, const CollapseLevel& b) {
  return a.kind == b.kind && (a.kind != CollapseLevel::Kind::Level || a.value == b.value);
}

std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& K) {
  std::vector<std::pair<Simplex, Simplex>> out;
  for (const auto& tau : K.facets) {
    if (tau.size() < 2) continue;
    for (size_t drop = 0; drop < tau.size(); ++drop) {
      Simplex sigma;
      for (size_t i = 0; i < tau.size(); ++i)
        if (i != drop) sigma.push_back(tau[i]);
      int count = 0;
      for (const auto& f : K.facets)
        if (is_face_of(sigma, f) && ++count > 1) break;
      if (count == 1) out.push_back({std::move(sigma), tau});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return simplex_lt(a.first, b.first);
    return simplex_lt(a.second, b.second);
  });
  return out;
}

bool is_free_pair(const SimplicialComplex& K, const Simplex& sigma, const Simplex& tau) {
  if (sigma.size() + 1 != tau.size() || !is_face_of(sigma, tau)) return false;
  int count = 0;
  bool tau_is_facet = false;
  for (const auto& f : K.facets) {
    if (is_face_of(sigma, f)) ++count;
    if (f == tau) tau_is_facet = true;
  }
  return count == 1 && tau_is_facet;
}

SimplicialComplex elementary_collapse(const SimplicialComplex& K, const Simplex& sigma,
                                      const Simplex& tau) {
  if (!is_free_pair(K, sigma, tau)) throw InvalidWitnessError("not a free pair");
  std::vector<Simplex> faces;
  for (const auto& f : K.facets)
    if (f != tau) faces.push_back(f);
  for (size_t drop = 0; drop < tau.size(); ++drop) {
    Simplex s;
    for (size_t i = 0; i < tau.size(); ++i)
      if (i != drop) s.push_back(tau[i]);
    if (s != sigma && !s.empty()) faces.push_back(std::move(s));
  }
  if (faces.empty()) throw LastVertexError("collapse would empty the complex");
  return compact_complex(K.n, prune_to_maximal(std::move(faces)), K.labels);
}

namespace {

// Shared verdict cache for the level searches, keyed by canonical form.
class VerdictCache {
 public:
  void set_budget(size_t bytes) {
    std::lock_guard<std::mutex> g(mu_);
    cap_ = bytes;
    shrink();
  }
  std::optional<bool> get(const std::string& key) {
    std::lock_guard<std::mutex> g(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    order_.splice(order_.begin(), order_, it->second.second);
    return it->second.first;
  }
  void put(const std::string& key, bool value) {
    std::lock_guard<std::mutex> g(mu_);
    if (map_.count(key)) return;  // write-once
    order_.push_front(key);
    map_.emplace(key, std::make_pair(value, order_.begin()));
    bytes_ += key.size() + 64;
    shrink();
  }

 private:
  void shrink() {
    while (bytes_ > cap_ && !order_.empty()) {
      const std::string& victim = order_.back();
      bytes_ -= victim.size() + 64;
      map_.erase(victim);
      order_.pop_back();
    }
  }
  std::mutex mu_;
  std::list<std::string> order_;
  std::map<std::string, std::pair<bool, std::list<std::string>::iterator>> map_;
  size_t bytes_ = 0;
  size_t cap_ = size_t{64} << 20;
};

VerdictCache& cache() {
  static VerdictCache c;
  return c;
}

std::vector<std::string> label_simplex(const SimplicialComplex& K, const Simplex& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(K.labels[v]);
  return out;
}

// Free pairs ordered for the collapsibility search: top dimension first.
std::vector<std::pair<Simplex, Simplex>> search_order_pairs(const SimplicialComplex& K) {
  auto pairs = free_faces(K);
  std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    return a.second.size() > b.second.size();
  });
  return pairs;
}

bool collapsible_rec(const SimplicialComplex& cur, BudgetCounter& budget,
                     std::set<std::string>& failed, std::vector<Move>& moves) {
  budget.charge();
  if (cur.n == 1) return true;
  std::string key = canonical_form(cur);
  if (failed.count(key)) return false;
  for (const auto& [sigma, tau] : search_order_pairs(cur)) {
    moves.push_back(free_face_collapse(label_simplex(cur, sigma), label_simplex(cur, tau)));
    if (collapsible_rec(elementary_collapse(cur, sigma, tau), budget, failed, moves)) return true;
    moves.pop_back();
  }
  failed.insert(key);
  return false;
}

std::string facet_label_key(const SimplicialComplex& K) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : K.facets) {
    auto r = label_simplex(K, f);
    std::sort(r.begin(), r.end());
    rows.push_back(std::move(r));
  }
  std::sort(rows.begin(), rows.end());
  std::string key;
  for (const auto& r : rows) {
    for (const auto& t : r) {
      key += t;
      key += ',';
    }
    key += ';';
  }
  return key;
}

bool nc_rec(const SimplicialComplex& K, int n, BudgetCounter& budget);

bool nc_children(const SimplicialComplex& K, int n, BudgetCounter& budget) {
  for (Vertex v = 0; v < K.n; ++v) {
    auto L = link(K, v);
    if (!L) continue;
    if (!nc_rec(*L, n - 1, budget)) continue;
    if (nc_rec(delete_vertex(K, v), n, budget)) return true;
  }
  return false;
}

bool nc_rec(const SimplicialComplex& K, int n, BudgetCounter& budget) {
  budget.charge();
  if (K.n == 1) return true;
  if (n == 0) return is_strong_collapsible(K);
  std::string key = "NC|" + std::to_string(n) + "|" + canonical_form(K);
  if (auto hit = cache().get(key)) return *hit;
  bool ok = nc_children(K, n, budget);
  cache().put(key, ok);
  return ok;
}

bool ne_rec(const SimplicialComplex& K, BudgetCounter& budget) {
  budget.charge();
  if (K.n == 1) return true;
  std::string key = "NE|" + canonical_form(K);
  if (auto hit = cache().get(key)) return *hit;
  bool ok = false;
  for (Vertex v = 0; v < K.n && !ok; ++v) {
    auto L = link(K, v);
    if (!L) continue;
    if (ne_rec(*L, budget) && ne_rec(delete_vertex(K, v), budget)) ok = true;
  }
  cache().put(key, ok);
  return ok;
}

}  // namespace

CollapseSearchResult is_collapsible(const SimplicialComplex& K, const SearchLimits& lim) {
  BudgetCounter budget(lim);
  std::set<std::string> failed;
  std::vector<Move> moves;
  try {
    if (collapsible_rec(K, budget, failed, moves)) return {Tri::True, MoveTrace{moves}};
    return {Tri::False, std::nullopt};
  } catch (const BudgetExceededError&) {
    return {Tri::Unknown, std::nullopt};
  }
}

std::optional<MoveTrace> collapses_to(const SimplicialComplex& K, const SimplicialComplex& L,
                                      const SearchLimits& lim) {
  for (const auto& f : L.facets)
    if (!has_simplex(K, simplex_by_labels(K, label_simplex(L, f))))
      throw MapMismatchError("target is not a subcomplex of the source");
  std::string target = facet_label_key(L);
  BudgetCounter budget(lim);
  std::set<std::string> failed;
  std::vector<Move> moves;

  auto rec = [&](auto&& self, const SimplicialComplex& cur) -> bool {
    budget.charge();
    std::string key = facet_label_key(cur);
    if (key == target) return true;
    if (failed.count(key)) return false;
    for (const auto& [sigma, tau] : search_order_pairs(cur)) {
      moves.push_back(free_face_collapse(label_simplex(cur, sigma), label_simplex(cur, tau)));
      if (self(self, elementary_collapse(cur, sigma, tau))) return true;
      moves.pop_back();
    }
    failed.insert(key);
    return false;
  };
  try {
    if (rec(rec, K)) return MoveTrace{moves};
    return std::nullopt;
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
}

Tri n_collapsible(const SimplicialComplex& K, int n, const SearchLimits& lim) {
  if (n < 0) throw Error("negative collapse level");
  BudgetCounter budget(lim);
  try {
    return tri_of(nc_rec(K, n, budget));
  } catch (const BudgetExceededError&) {
    return Tri::Unknown;
  }
}

std::optional<MoveTrace> n_collapse_trace(const SimplicialComplex& K, int n,
                                          const SearchLimits& lim) {
  if (n_collapsible(K, n, lim) != Tri::True) return std::nullopt;
  if (n == 0) return core(K).trace;
  MoveTrace out;
  SimplicialComplex cur = K;
  while (cur.n > 1) {
    bool moved = false;
    for (Vertex v = 0; v < cur.n && !moved; ++v) {
      auto L = link(cur, v);
      if (!L || n_collapsible(*L, n - 1, lim) != Tri::True) continue;
      SimplicialComplex next = delete_vertex(cur, v);
      if (n_collapsible(next, n, lim) != Tri::True) continue;
      out.moves.push_back(ne_delete(cur.labels[v], n));
      cur = std::move(next);
      moved = true;
    }
    if (!moved) return std::nullopt;  // budget starved a certified branch
  }
  return out;
}

Tri non_evasive(const SimplicialComplex& K, const SearchLimits& lim) {
  BudgetCounter budget(lim);
  try {
    return tri_of(ne_rec(K, budget));
  } catch (const BudgetExceededError&) {
    return Tri::Unknown;
  }
}

CollapseLevel collapse_level(const SimplicialComplex& K, const SearchLimits& lim) {
  Tri ne = non_evasive(K, lim);
  if (ne == Tri::False) return CollapseLevel::evasive();
  if (ne == Tri::Unknown) return CollapseLevel::unknown();
  int bound = std::max(0, K.dim() - 1);
  for (int n = 0; n <= bound; ++n) {
    Tri r = n_collapsible(K, n, lim);
    if (r == Tri::True) return CollapseLevel::level(n);
    if (r == Tri::Unknown) return CollapseLevel::unknown();
  }
  throw Error("non-evasive complex exceeded its level bound");
}

std::optional<MoveTrace> ne_collapses_to(const SimplicialComplex& K,
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

  auto rec = [&](auto&& self, const std::vector<Vertex>& alive) -> bool {
    budget.charge();
    if (alive == target) return true;
    if (failed.count(alive)) return false;
    SimplicialComplex cur = full_subcomplex(K, alive);
    for (int v = 0; v < cur.n; ++v) {
      if (std::binary_search(target.begin(), target.end(), alive[v])) continue;
      auto L = link(cur, v);
      if (!L) continue;
      CollapseLevel cl = collapse_level(*L, lim);
      if (cl.kind != CollapseLevel::Kind::Level) continue;
      std::vector<Vertex> next;
      next.reserve(alive.size() - 1);
      for (Vertex u : alive)
        if (u != alive[v]) next.push_back(u);
      moves.push_back(ne_delete(cur.labels[v], cl.value + 1));
      if (self(self, next)) return true;
      moves.pop_back();
    }
    failed.insert(alive);
    return false;
  };
  std::vector<Vertex> all(K.n);
  for (int v = 0; v < K.n; ++v) all[v] = v;
  try {
    if (rec(rec, all)) return MoveTrace{moves};
    return std::nullopt;
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
}

MoveTrace expand_strong_trace(const SimplicialComplex& K, const MoveTrace& strong) {
  MoveTrace out;
  SimplicialComplex cur = K;
  for (const auto& m : strong.moves) {
    if (m.kind != MoveKind::StrongDelete)
      throw InvalidTraceError("expected a strong-deletion trace");
    Vertex v = cur.vertex_by_label(m.a[0]);
    Vertex w = cur.vertex_by_label(m.b[0]);
    for (int i : facets_with(cur, v))
      if (!std::binary_search(cur.facets[i].begin(), cur.facets[i].end(), w))
        throw InvalidTraceError("deleted vertex is not dominated by its witness");
    // Simplices containing v but not w, paired with their w-extensions.
    std::set<Simplex> heads;
    for (int i : facets_with(cur, v)) {
      const Simplex& f = cur.facets[i];
      int m_size = (int)f.size();
      for (unsigned sub = 1; sub < (1u << m_size); ++sub) {
        Simplex s;
        bool has_v = false, has_w = false;
        for (int b = 0; b < m_size; ++b)
          if (sub & (1u << b)) {
            s.push_back(f[b]);
            has_v |= f[b] == v;
            has_w |= f[b] == w;
          }
        if (has_v && !has_w) heads.insert(std::move(s));
      }
    }
    std::vector<Simplex> ordered(heads.begin(), heads.end());
    std::sort(ordered.begin(), ordered.end(), [](const Simplex& a, const Simplex& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    for (const auto& sigma : ordered) {
      Simplex tau = sigma;
      tau.push_back(w);
      std::sort(tau.begin(), tau.end());
      out.moves.push_back(free_face_collapse(label_simplex(cur, sigma), label_simplex(cur, tau)));
    }
    cur = delete_vertex(cur, v);
  }
  return out;
}

WelkerResult welker_pipeline_from_trace(const SimplicialComplex& K, const MoveTrace& collapse) {
  FacePosetResult fp = face_poset(K);
  WelkerResult out;
  out.k_prime = order_complex(fp.poset);

  SimplicialComplex cur = K;
  FinitePoset X = fp.poset;
  std::vector<Simplex> alive = fp.simplices;  // element i of X is alive[i], in K's vertex ids

  auto element_of = [&](const Simplex& s) {
    auto it = std::find(alive.begin(), alive.end(), s);
    if (it == alive.end()) throw InvalidTraceError("collapsed simplex is not present");
    return (int)(it - alive.begin());
  };
  auto drop = [&](int x) {
    std::vector<int> keep;
    keep.reserve(X.n - 1);
    for (int y = 0; y < X.n; ++y)
      if (y != x) keep.push_back(y);
    X = subposet(X, keep);
    alive.erase(alive.begin() + x);
  };

  for (const auto& m : collapse.moves) {
    if (m.kind != MoveKind::FreeFaceCollapse)
      throw InvalidTraceError("expected a free-face collapse trace");
    Simplex sigma = simplex_by_labels(K, m.a);
    Simplex tau = simplex_by_labels(K, m.b);
    {
      // Validate against the complex being collapsed alongside the poset.
      Simplex cs = simplex_by_labels(cur, m.a), ct = simplex_by_labels(cur, m.b);
      cur = elementary_collapse(cur, cs, ct);
    }
    int xs = element_of(sigma);
    auto cov = covers_up(X, xs);
    if (cov.size() != 1 || alive[cov[0]] != tau)
      throw InvalidTraceError("free face is not an upward beat point of the face poset");
    out.face_poset_trace.moves.push_back(beat_remove(X.labels[xs], BeatDir::Up));
    out.one_collapse.moves.push_back(ne_delete(X.labels[xs], 1));
    drop(xs);
    int xt = element_of(tau);
    FinitePoset lk = link_hat(X, xt);
    if (lk.n == 0 || !is_contractible(lk))
      throw InvalidTraceError("collapsed facet is not a weak point of the face poset");
    out.face_poset_trace.moves.push_back(weak_remove(X.labels[xt]));
    out.one_collapse.moves.push_back(ne_delete(X.labels[xt], 1));
    drop(xt);
  }
  out.l_prime = order_complex(X);
  return out;
}

std::optional<WelkerResult> welker_pipeline(const SimplicialComplex& K, const SimplicialComplex& L,
                                            const SearchLimits& lim) {
  std::optional<MoveTrace> trace;
  if (L.n == 1) {
    auto r = is_collapsible(K, lim);
    if (r.verdict == Tri::True) trace = r.trace;
  } else {
    trace = collapses_to(K, L, lim);
  }
  if (!trace) return std::nullopt;
  return welker_pipeline_from_trace(K, *trace);
}

void set_collapse_cache_bytes(size_t bytes) { cache().set_budget(bytes); }

}  // namespace shtop
