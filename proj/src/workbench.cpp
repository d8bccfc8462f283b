#include "shtop/workbench.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "shtop/canonical.hpp"
#include "shtop/collapse.hpp"
#include "shtop/functors.hpp"
#include "shtop/symmetry.hpp"

namespace shtop {

int Rng::below(int n) {
  if (n <= 0) throw Error("empty range");
  uint64_t bound = uint64_t(n);
  uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return int(x % bound);
}

int Rng::between(int lo, int hi) {
  if (hi < lo) throw Error("empty range");
  return lo + below(hi - lo + 1);
}

bool Rng::chance(double p) {
  double u = double(next() >> 11) * (1.0 / 9007199254740992.0);
  return u < p;
}

namespace {

std::vector<std::string> default_labels(int n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

SimplicialComplex uniform_complex(Rng& rng, int max_vertices, int max_facets,
                                  std::pair<int, int> size_range) {
  int n = rng.between(1, max_vertices);
  int m = rng.between(1, max_facets);
  int lo = std::max(1, size_range.first);
  std::vector<Simplex> facets;
  for (int i = 0; i < m; ++i) {
    int s = rng.between(std::min(lo, n), std::min(std::max(lo, size_range.second), n));
    std::set<Vertex> pick;
    while ((int)pick.size() < s) pick.insert(rng.below(n));
    facets.emplace_back(pick.begin(), pick.end());
  }
  return compact_complex(n, prune_to_maximal(std::move(facets)), default_labels(n, "v"));
}

std::string fresh_label(const std::vector<std::string>& taken, const std::string& prefix) {
  std::set<std::string> used(taken.begin(), taken.end());
  for (int t = 0;; ++t) {
    std::string cand = prefix + std::to_string(t);
    if (!used.count(cand)) return cand;
  }
}

}  // namespace

SimplicialComplex grow_by_domination(const SimplicialComplex& K, int steps, Rng& rng) {
  SimplicialComplex cur = K;
  for (int s = 0; s < steps; ++s) {
    Vertex w = rng.below(cur.n);
    std::vector<int> fw = facets_with(cur, w);
    std::vector<int> chosen;
    for (int i : fw)
      if (rng.chance(0.5)) chosen.push_back(i);
    if (chosen.empty()) chosen.push_back(fw[rng.below((int)fw.size())]);
    Vertex u = cur.n;
    std::vector<Simplex> facets = cur.facets;
    for (int i : chosen) {
      Simplex f = cur.facets[i];
      f.push_back(u);
      facets.push_back(std::move(f));
    }
    std::vector<std::string> labels = cur.labels;
    labels.push_back(fresh_label(labels, "g"));
    cur = make_complex(cur.n + 1, prune_to_maximal(std::move(facets)), std::move(labels));
  }
  return cur;
}

FinitePoset grow_by_beat_points(const FinitePoset& X, int steps, Rng& rng) {
  FinitePoset cur = X;
  for (int s = 0; s < steps; ++s) {
    Vertex y = rng.below(cur.n);
    bool above = rng.chance(0.5);
    int u = cur.n;
    std::vector<std::pair<int, int>> rels;
    for (int a = 0; a < cur.n; ++a)
      for (int b : cur.below[a].members()) rels.push_back({b, a});
    if (above)
      rels.push_back({y, u});
    else
      rels.push_back({u, y});
    std::vector<std::string> labels = cur.labels;
    labels.push_back(fresh_label(labels, "x"));
    cur = make_poset(cur.n + 1, rels, std::move(labels));
  }
  return cur;
}

SimplicialComplex gen_complex(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  if (cfg.mode == GenMode::UniformFacets)
    return uniform_complex(rng, cfg.max_vertices, cfg.max_facets, cfg.facet_size_range);
  SimplicialComplex base = uniform_complex(rng, std::max(1, cfg.max_vertices / 2), cfg.max_facets,
                                           cfg.facet_size_range);
  return grow_by_domination(base, cfg.max_vertices - base.n, rng);
}

FinitePoset gen_poset(const GeneratorConfig& cfg) {
  Rng rng(cfg.seed);
  if (cfg.mode == GenMode::UniformFacets) {
    int n = rng.between(1, cfg.max_vertices);
    std::vector<std::pair<int, int>> rels;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(0.3)) rels.push_back({i, j});
    return make_poset(n, rels, default_labels(n, "x"));
  }
  FinitePoset base = make_poset(1, {}, {"x0"});
  return grow_by_beat_points(base, cfg.max_vertices - 1, rng);
}

namespace {

SimplicialComplex full_simplex(int k) {
  Simplex top(k);
  for (int i = 0; i < k; ++i) top[i] = i;
  return make_complex(k, {top}, default_labels(k, "v"));
}

SimplicialComplex simplex_boundary(int k) {
  std::vector<Simplex> facets;
  for (int drop = 0; drop < k; ++drop) {
    Simplex f;
    for (int i = 0; i < k; ++i)
      if (i != drop) f.push_back(i);
    facets.push_back(std::move(f));
  }
  return make_complex(k, facets, default_labels(k, "v"));
}

SimplicialComplex cycle_complex(int m) {
  std::vector<Simplex> facets;
  for (int i = 0; i < m; ++i) facets.push_back({std::min(i, (i + 1) % m), std::max(i, (i + 1) % m)});
  return make_complex(m, facets, default_labels(m, "v"));
}

SimplicialComplex sphere_join(int k) {
  SimplicialComplex K = simplex_boundary(2);
  for (int i = 1; i < k; ++i) K = join(K, simplex_boundary(2));
  return K;
}

}  // namespace

std::vector<SimplicialComplex> vh_instances(int max_vertices) {
  std::vector<SimplicialComplex> out;
  for (int k = 1; k <= max_vertices; ++k) out.push_back(full_simplex(k));
  for (int k = 2; k <= max_vertices; ++k) out.push_back(simplex_boundary(k));
  for (int m = 3; m <= max_vertices; ++m) out.push_back(cycle_complex(m));
  for (int k = 2; 2 * k <= max_vertices; ++k) out.push_back(sphere_join(k));
  auto fits = [&](const SimplicialComplex& K) { return K.n <= max_vertices; };
  for (const SimplicialComplex& base :
       {simplex_boundary(2), simplex_boundary(3), cycle_complex(4), full_simplex(2)})
    for (int m = 2; m * base.n <= max_vertices; ++m) out.push_back(multiple(base, m));
  for (const SimplicialComplex& base :
       {cycle_complex(3), cycle_complex(4), full_simplex(2), full_simplex(3), full_simplex(4),
        simplex_boundary(2)}) {
    SimplicialComplex two = disjoint_union(base, base);
    if (fits(two)) out.push_back(two);
  }
  return out;
}

CoreResult random_core(const SimplicialComplex& K, Rng& rng) {
  CoreResult out{K, {}};
  for (;;) {
    auto dom = dominated_vertices(out.complex);
    if (dom.empty()) return out;
    auto [v, w] = dom[rng.below((int)dom.size())];
    out.trace.moves.push_back(strong_delete(out.complex.labels[v], out.complex.labels[w]));
    out.complex = delete_vertex(out.complex, v);
  }
}

namespace {

TraceVerdict fail_at(int idx, std::string reason, bool starved = false) {
  return {false, idx, starved, std::move(reason)};
}

TraceVerdict apply_to_complex(SimplicialComplex& cur, const Move& m, int idx,
                              const SearchLimits& lim) {
  switch (m.kind) {
    case MoveKind::StrongDelete: {
      Vertex v = cur.vertex_by_label(m.a[0]);
      Vertex w = cur.vertex_by_label(m.b[0]);
      if (v == w) return fail_at(idx, "vertex cannot witness itself");
      for (int i : facets_with(cur, v))
        if (!std::binary_search(cur.facets[i].begin(), cur.facets[i].end(), w))
          return fail_at(idx, "vertex is not dominated by the claimed witness");
      cur = delete_vertex(cur, v);
      return {true, -1, false, ""};
    }
    case MoveKind::FreeFaceCollapse: {
      Simplex sigma = simplex_by_labels(cur, m.a);
      Simplex tau = simplex_by_labels(cur, m.b);
      if (!is_free_pair(cur, sigma, tau)) return fail_at(idx, "pair is not free");
      cur = elementary_collapse(cur, sigma, tau);
      return {true, -1, false, ""};
    }
    case MoveKind::NEDelete: {
      if (m.level < 1) return fail_at(idx, "complex deletions need a positive level");
      Vertex v = cur.vertex_by_label(m.a[0]);
      auto L = link(cur, v);
      if (!L) return fail_at(idx, "isolated vertices cannot be deleted");
      Tri r = n_collapsible(*L, m.level - 1, lim);
      if (r == Tri::Unknown) return fail_at(idx, "budget exhausted on a link check", true);
      if (r == Tri::False) return fail_at(idx, "link misses the claimed collapse level");
      cur = delete_vertex(cur, v);
      return {true, -1, false, ""};
    }
    default:
      return fail_at(idx, "move kind does not apply to complexes");
  }
}

TraceVerdict apply_to_poset(FinitePoset& cur, const Move& m, int idx, const SearchLimits& lim) {
  auto without = [&](int x) {
    std::vector<int> keep;
    for (int y = 0; y < cur.n; ++y)
      if (y != x) keep.push_back(y);
    return subposet(cur, keep);
  };
  switch (m.kind) {
    case MoveKind::BeatRemove: {
      int x = cur.element_by_label(m.a[0]);
      auto cov = m.dir == BeatDir::Up ? covers_up(cur, x) : covers_down(cur, x);
      if (cov.size() != 1) return fail_at(idx, "element lacks a unique cover on that side");
      cur = without(x);
      return {true, -1, false, ""};
    }
    case MoveKind::WeakRemove: {
      int x = cur.element_by_label(m.a[0]);
      FinitePoset lk = link_hat(cur, x);
      if (lk.n == 0) return fail_at(idx, "isolated elements cannot be weak");
      if (!is_contractible(lk)) return fail_at(idx, "strictly comparable part is not contractible");
      cur = without(x);
      return {true, -1, false, ""};
    }
    case MoveKind::NEDelete: {
      if (m.level != 0) return fail_at(idx, "poset deletions carry level 0");
      int x = cur.element_by_label(m.a[0]);
      FinitePoset lk = link_hat(cur, x);
      if (lk.n == 0) return fail_at(idx, "isolated elements cannot be deleted");
      Tri r = poset_non_evasive(lk, lim);
      if (r == Tri::Unknown) return fail_at(idx, "budget exhausted on a link check", true);
      if (r == Tri::False) return fail_at(idx, "strictly comparable part is evasive");
      cur = without(x);
      return {true, -1, false, ""};
    }
    default:
      return fail_at(idx, "move kind does not apply to posets");
  }
}

}  // namespace

TraceVerdict verify_trace(const TraceObject& start, const MoveTrace& trace, const TraceObject& end,
                          const SearchLimits& lim) {
  if (start.index() != end.index()) return fail_at(-1, "start and end objects differ in kind");
  TraceObject cur = start;
  for (size_t i = 0; i < trace.moves.size(); ++i) {
    TraceVerdict step;
    try {
      if (auto* K = std::get_if<SimplicialComplex>(&cur))
        step = apply_to_complex(*K, trace.moves[i], (int)i, lim);
      else
        step = apply_to_poset(std::get<FinitePoset>(cur), trace.moves[i], (int)i, lim);
    } catch (const BudgetExceededError& e) {
      return fail_at((int)i, e.what(), true);
    } catch (const Error& e) {
      return fail_at((int)i, e.what());
    }
    if (!step.ok) return step;
  }
  try {
    if (auto* K = std::get_if<SimplicialComplex>(&cur)) {
      if (canonical_form(*K, lim) != canonical_form(std::get<SimplicialComplex>(end), lim))
        return fail_at((int)trace.moves.size(), "replay ends at a different complex");
    } else {
      if (canonical_form(std::get<FinitePoset>(cur), lim) !=
          canonical_form(std::get<FinitePoset>(end), lim))
        return fail_at((int)trace.moves.size(), "replay ends at a different poset");
    }
  } catch (const BudgetExceededError& e) {
    return fail_at((int)trace.moves.size(), e.what(), true);
  }
  return {true, -1, false, ""};
}

namespace {

bool brute_strong_rec(const SimplicialComplex& K) {
  if (K.n == 1) return true;
  std::set<Vertex> seen;
  for (auto [v, w] : dominated_vertices(K))
    if (seen.insert(v).second && brute_strong_rec(delete_vertex(K, v))) return true;
  return false;
}

}  // namespace

bool brute_force_strong_collapsible(const SimplicialComplex& K) {
  if (K.n > 10) throw TooLargeError("oracle is limited to 10 vertices");
  return brute_strong_rec(K);
}

namespace {

// Face-closed simplex pool grown by elementary expansions.
struct ExpansionState {
  int nv = 1;
  std::set<Simplex> pool{{0}};
  std::vector<std::pair<Simplex, Simplex>> steps;

  void pendant(Rng& rng) {
    Vertex u = rng.below(nv);
    Vertex w = nv++;
    steps.push_back({{w}, {u, w}});
    pool.insert({w});
    pool.insert({u, w});
  }

  bool has_edge(Vertex a, Vertex b) const {
    Simplex e{std::min(a, b), std::max(a, b)};
    return pool.count(e) != 0;
  }

  // Adds the triangle abc together with its one missing edge so the pair
  // stays an elementary expansion. Fails if zero or two edges are missing.
  bool fill(Vertex a, Vertex b, Vertex c) {
    Simplex tau{a, b, c};
    std::sort(tau.begin(), tau.end());
    if (tau[0] == tau[1] || tau[1] == tau[2]) return false;
    if (pool.count(tau)) return false;
    std::vector<Simplex> missing;
    for (size_t drop = 0; drop < 3; ++drop) {
      Simplex s;
      for (size_t i = 0; i < 3; ++i)
        if (i != drop) s.push_back(tau[i]);
      if (!pool.count(s)) missing.push_back(std::move(s));
    }
    if (missing.size() != 1) return false;
    steps.push_back({missing[0], tau});
    pool.insert(missing[0]);
    pool.insert(tau);
    return true;
  }

  // New vertex coned over an existing edge; two expansion steps.
  bool flap(Rng& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Simplex& s : pool)
      if (s.size() == 2) edges.push_back({s[0], s[1]});
    if (edges.empty()) {
      pendant(rng);
      return true;
    }
    auto [u, w] = edges[rng.below((int)edges.size())];
    Vertex v = nv++;
    steps.push_back({{v}, {u, v}});
    pool.insert({v});
    pool.insert(Simplex{u, v});
    return fill(u, w, v);
  }

  // Deficiency of the link graph of v from the target shape: connected and
  // holding at least one cycle. Tree links are exactly the strong collapsible
  // ones, so the score is zero iff no deletion at v can open a recursion.
  int link_score(Vertex v) const {
    std::vector<Vertex> verts;
    for (Vertex u = 0; u < nv; ++u)
      if (u != v && has_edge(u, v)) verts.push_back(u);
    if (verts.empty()) return 100;
    int V = (int)verts.size(), E = 0;
    std::vector<int> comp(V);
    for (int i = 0; i < V; ++i) comp[i] = i;
    std::function<int(int)> find = [&](int i) {
      while (comp[i] != i) i = comp[i] = comp[comp[i]];
      return i;
    };
    for (int i = 0; i < V; ++i)
      for (int j = i + 1; j < V; ++j) {
        Simplex t{v, verts[i], verts[j]};
        std::sort(t.begin(), t.end());
        if (pool.count(t)) {
          ++E;
          comp[find(i)] = find(j);
        }
      }
    int ncomp = 0;
    for (int i = 0; i < V; ++i)
      if (find(i) == i) ++ncomp;
    int cycles = E - V + ncomp;
    return 2 * (ncomp - 1) + std::max(0, 1 - cycles);
  }

  int total_score() const {
    int s = 0;
    for (Vertex v = 0; v < nv; ++v) s += link_score(v);
    return s;
  }

  SimplicialComplex complex() const {
    std::vector<Simplex> facets(pool.begin(), pool.end());
    return make_complex(nv, prune_to_maximal(std::move(facets)),
                        default_labels(nv, "v"));
  }
};

}  // namespace

std::optional<ExpansionWitness> search_collapsible_evasive(uint64_t seed, int tries,
                                                           int max_vertices,
                                                           const SearchLimits& lim) {
  Rng rng(seed);
  for (int t = 0; t < tries; ++t) {
    ExpansionState st;
    int target = std::max(5, rng.between(max_vertices - 2, max_vertices));
    st.pendant(rng);
    while (st.nv < target) st.flap(rng);

    // Greedy closing: fills that repair disconnected or acyclic links first.
    int budget_moves = 40 * target;
    for (int it = 0; it < budget_moves; ++it) {
      if (st.total_score() == 0) break;
      int best_delta = INT_MAX;
      std::vector<std::array<Vertex, 3>> best;
      std::vector<std::array<Vertex, 3>> legal;
      for (Vertex a = 0; a < st.nv; ++a)
        for (Vertex b = a + 1; b < st.nv; ++b)
          for (Vertex c = b + 1; c < st.nv; ++c) {
            ExpansionState probe = st;
            if (!probe.fill(a, b, c)) continue;
            legal.push_back({a, b, c});
            int delta = probe.link_score(a) + probe.link_score(b) +
                        probe.link_score(c) - st.link_score(a) -
                        st.link_score(b) - st.link_score(c);
            if (delta < best_delta) {
              best_delta = delta;
              best.clear();
            }
            if (delta == best_delta) best.push_back({a, b, c});
          }
      if (legal.empty()) break;
      const auto& pick = rng.chance(0.85) ? best[rng.below((int)best.size())]
                                          : legal[rng.below((int)legal.size())];
      st.fill(pick[0], pick[1], pick[2]);
    }

    if (st.total_score() != 0) continue;
    SimplicialComplex K = st.complex();
    if (K.n < 5) continue;
    if (non_evasive(K, lim) != Tri::False) continue;
    MoveTrace collapse;
    for (auto it = st.steps.rbegin(); it != st.steps.rend(); ++it) {
      std::vector<std::string> a, b;
      for (Vertex v : it->first) a.push_back(K.labels[v]);
      for (Vertex v : it->second) b.push_back(K.labels[v]);
      collapse.moves.push_back(free_face_collapse(a, b));
    }
    return ExpansionWitness{std::move(K), std::move(collapse)};
  }
  return std::nullopt;
}

std::optional<std::pair<FinitePoset, MoveTrace>> search_minimal_collapsible_poset(
    uint64_t seed, int tries, int max_elements, const SearchLimits& lim) {
  Rng rng(seed);
  for (int t = 0; t < tries; ++t) {
    FinitePoset X{};
    if (t % 2 == 0) {
      int n = rng.between(std::max(1, max_elements - 4), max_elements);
      std::vector<std::pair<int, int>> rels;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.chance(0.3)) rels.push_back({i, j});
      X = make_poset(n, rels, default_labels(n, "x"));
    } else {
      // Face posets of grown collapsible complexes reach minimal collapsible
      // cores far earlier than uniform relation soup does.
      ExpansionState st;
      st.pendant(rng);
      int target = rng.between(5, 7);
      while (st.nv < target) st.flap(rng);
      int extra = rng.between(2, 6);
      for (int s = 0; s < extra; ++s) {
        Vertex a = rng.below(st.nv), b = rng.below(st.nv), c = rng.below(st.nv);
        st.fill(a, b, c);
      }
      X = face_poset(st.complex()).poset;
      if (X.n > max_elements) continue;
    }
    FinitePoset C = poset_core(X).core;
    if (C.n <= 1) continue;
    PosetCollapseResult r = poset_collapses_to_point(C, lim);
    if (r.verdict != Tri::True) continue;
    return std::make_pair(std::move(C), std::move(*r.trace));
  }
  return std::nullopt;
}

}  // namespace shtop
