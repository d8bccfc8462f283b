#include "shtop/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "shtop/canonical.hpp"

namespace shtop {

const std::string& FinitePoset::label(int x) const {
  if (x < 0 || x >= n) throw UnknownElementError("element id out of range");
  return labels[x];
}

int FinitePoset::element_by_label(const std::string& tok) const {
  for (int x = 0; x < n; ++x)
    if (labels[x] == tok) return x;
  throw UnknownElementError("no element labelled '" + tok + "'");
}

bool operator==(const FinitePoset& a, const FinitePoset& b) {
  return a.n == b.n && a.above == b.above;
}

FinitePoset make_poset(int n, const std::vector<std::pair<int, int>>& less_pairs,
                       std::vector<std::string> labels) {
  if (n < 0) throw Error("negative element count");
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : less_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw UnknownElementError("relation element out of range");
    if (a == b) throw AntisymmetryError("element related to itself");
    adj[a].push_back(b);
  }
  FinitePoset X;
  X.n = n;
  X.below.assign(n, Bits(n));
  X.above.assign(n, Bits(n));
  for (int s = 0; s < n; ++s) {
    // DFS reachability gives the transitive closure row by row.
    std::vector<int> stack = adj[s];
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      if (X.above[s].test(y)) continue;
      X.above[s].set(y);
      for (int z : adj[y]) stack.push_back(z);
    }
    if (X.above[s].test(s)) throw AntisymmetryError("cycle through element " + std::to_string(s));
  }
  for (int x = 0; x < n; ++x)
    for (int y : X.above[x].members()) X.below[y].set(x);
  if (labels.empty()) {
    labels.reserve(n);
    for (int x = 0; x < n; ++x) labels.push_back("x" + std::to_string(x));
  }
  if ((int)labels.size() != n) throw Error("label count does not match element count");
  std::set<std::string> uniq(labels.begin(), labels.end());
  if ((int)uniq.size() != n) throw Error("duplicate element labels");
  X.labels = std::move(labels);
  return X;
}

FinitePoset subposet(const FinitePoset& X, const std::vector<int>& keep) {
  std::vector<int> ids = keep;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int x : ids)
    if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  FinitePoset Y;
  Y.n = (int)ids.size();
  Y.below.assign(Y.n, Bits(Y.n));
  Y.above.assign(Y.n, Bits(Y.n));
  Y.labels.reserve(Y.n);
  for (int i = 0; i < Y.n; ++i) {
    Y.labels.push_back(X.labels[ids[i]]);
    for (int j = 0; j < Y.n; ++j) {
      if (X.less(ids[i], ids[j])) Y.above[i].set(j);
      if (X.less(ids[j], ids[i])) Y.below[i].set(j);
    }
  }
  return Y;
}

std::vector<int> up_set(const FinitePoset& X, int x) {
  if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  return X.above[x].members();
}

std::vector<int> down_set(const FinitePoset& X, int x) {
  if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  return X.below[x].members();
}

FinitePoset link_hat(const FinitePoset& X, int x) {
  if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  Bits comp = X.above[x];
  comp |= X.below[x];
  return subposet(X, comp.members());
}

std::vector<int> covers_up(const FinitePoset& X, int x) {
  std::vector<int> out;
  for (int y : X.above[x].members()) {
    Bits between = X.above[x];
    between &= X.below[y];
    if (!between.any()) out.push_back(y);
  }
  return out;
}

std::vector<int> covers_down(const FinitePoset& X, int x) {
  std::vector<int> out;
  for (int y : X.below[x].members()) {
    Bits between = X.below[x];
    between &= X.above[y];
    if (!between.any()) out.push_back(y);
  }
  return out;
}

std::vector<std::pair<int, BeatDir>> beat_points(const FinitePoset& X) {
  std::vector<std::pair<int, BeatDir>> out;
  for (int x = 0; x < X.n; ++x) {
    if ((int)covers_down(X, x).size() == 1) out.push_back({x, BeatDir::Down});
    if ((int)covers_up(X, x).size() == 1) out.push_back({x, BeatDir::Up});
  }
  return out;
}

PosetCoreResult poset_core(const FinitePoset& X) {
  PosetCoreResult res;
  res.core = X;
  for (;;) {
    auto beats = beat_points(res.core);
    if (beats.empty()) return res;
    auto [x, dir] = beats.front();
    res.trace.moves.push_back(beat_remove(res.core.labels[x], dir));
    std::vector<int> keep;
    for (int y = 0; y < res.core.n; ++y)
      if (y != x) keep.push_back(y);
    res.core = subposet(res.core, keep);
  }
}

bool is_contractible(const FinitePoset& X) {
  if (X.n == 0) return false;
  return poset_core(X).core.n == 1;
}

std::vector<int> weak_points(const FinitePoset& X) {
  std::vector<int> out;
  for (int x = 0; x < X.n; ++x) {
    FinitePoset L = link_hat(X, x);
    if (L.n > 0 && is_contractible(L)) out.push_back(x);
  }
  return out;
}

namespace {

FinitePoset without(const FinitePoset& X, int x) {
  std::vector<int> keep;
  keep.reserve(X.n - 1);
  for (int y = 0; y < X.n; ++y)
    if (y != x) keep.push_back(y);
  return subposet(X, keep);
}

bool collapse_point_rec(const FinitePoset& X, BudgetCounter& budget, std::set<std::string>& failed,
                        std::vector<Move>& trace) {
  budget.charge();
  if (X.n == 1) return true;
  std::string key = canonical_form(X);
  if (failed.count(key)) return false;
  for (int x : weak_points(X)) {
    trace.push_back(weak_remove(X.labels[x]));
    if (collapse_point_rec(without(X, x), budget, failed, trace)) return true;
    trace.pop_back();
  }
  failed.insert(key);
  return false;
}

bool non_evasive_rec(const FinitePoset& X, BudgetCounter& budget, std::map<std::string, bool>& memo) {
  budget.charge();
  if (X.n == 1) return true;
  if (X.n == 0) return false;
  std::string key = canonical_form(X);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (int x = 0; x < X.n && !ok; ++x) {
    FinitePoset L = link_hat(X, x);
    if (L.n == 0) continue;
    if (non_evasive_rec(L, budget, memo) && non_evasive_rec(without(X, x), budget, memo)) ok = true;
  }
  memo[key] = ok;
  return ok;
}

}  // namespace

PosetCollapseResult poset_collapses_to_point(const FinitePoset& X, const SearchLimits& lim) {
  if (X.n == 0) return {Tri::False, std::nullopt};
  BudgetCounter budget(lim);
  std::set<std::string> failed;
  std::vector<Move> trace;
  try {
    if (collapse_point_rec(X, budget, failed, trace)) return {Tri::True, MoveTrace{trace}};
    return {Tri::False, std::nullopt};
  } catch (const BudgetExceededError&) {
    return {Tri::Unknown, std::nullopt};
  }
}

Tri poset_non_evasive(const FinitePoset& X, const SearchLimits& lim) {
  if (X.n == 0) return Tri::False;
  BudgetCounter budget(lim);
  std::map<std::string, bool> memo;
  try {
    return tri_of(non_evasive_rec(X, budget, memo));
  } catch (const BudgetExceededError&) {
    return Tri::Unknown;
  }
}

std::optional<MoveTrace> poset_strong_collapses_to(const FinitePoset& X,
                                                   const std::vector<int>& keep) {
  std::vector<int> target = keep;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (int x : target)
    if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  std::vector<int> alive(X.n);
  for (int i = 0; i < X.n; ++i) alive[i] = i;
  FinitePoset cur = X;
  MoveTrace trace;
  for (;;) {
    auto beats = beat_points(cur);
    bool moved = false;
    for (auto [x, dir] : beats) {
      if (std::binary_search(target.begin(), target.end(), alive[x])) continue;
      trace.moves.push_back(beat_remove(cur.labels[x], dir));
      cur = without(cur, x);
      alive.erase(alive.begin() + x);
      moved = true;
      break;
    }
    if (!moved) break;
  }
  if (alive == target) return trace;
  return std::nullopt;
}

std::optional<MoveTrace> poset_ne_collapses_to(const FinitePoset& X, const std::vector<int>& keep,
                                               const SearchLimits& lim) {
  std::vector<int> target = keep;
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());
  for (int x : target)
    if (x < 0 || x >= X.n) throw UnknownElementError("element id out of range");
  BudgetCounter budget(lim);
  std::set<std::vector<int>> failed;
  std::vector<Move> trace;
  std::vector<int> alive(X.n);
  for (int i = 0; i < X.n; ++i) alive[i] = i;

  // Recursive lambda over (current poset, original ids still alive).
  auto rec = [&](auto&& self, const FinitePoset& cur, std::vector<int>& ids) -> bool {
    budget.charge();
    if (ids == target) return true;
    if (failed.count(ids)) return false;
    for (int x = 0; x < cur.n; ++x) {
      if (std::binary_search(target.begin(), target.end(), ids[x])) continue;
      FinitePoset L = link_hat(cur, x);
      if (L.n == 0 || poset_non_evasive(L, lim) != Tri::True) continue;
      trace.push_back(ne_delete(cur.labels[x], 0));
      int removed = ids[x];
      ids.erase(ids.begin() + x);
      if (self(self, without(cur, x), ids)) return true;
      ids.insert(ids.begin() + x, removed);
      trace.pop_back();
    }
    failed.insert(ids);
    return false;
  };
  try {
    if (rec(rec, X, alive)) return MoveTrace{trace};
    return std::nullopt;
  } catch (const BudgetExceededError&) {
    return std::nullopt;
  }
}

PosetMap identity_poset_map(const FinitePoset& X) {
  PosetMap f{X, X, std::vector<int>(X.n)};
  for (int x = 0; x < X.n; ++x) f.element_map[x] = x;
  return f;
}

bool is_order_preserving(const PosetMap& f) {
  if ((int)f.element_map.size() != f.source.n) return false;
  for (int y : f.element_map)
    if (y < 0 || y >= f.target.n) return false;
  for (int x = 0; x < f.source.n; ++x)
    for (int y : f.source.above[x].members()) {
      int a = f.element_map[x], b = f.element_map[y];
      if (a != b && !f.target.less(a, b)) return false;
    }
  return true;
}

PosetMap compose(const PosetMap& g, const PosetMap& f) {
  if (f.target != g.source) throw MapMismatchError("compose: middle posets differ");
  PosetMap h{f.source, g.target, {}};
  h.element_map.reserve(f.source.n);
  for (int x = 0; x < f.source.n; ++x) h.element_map.push_back(g.element_map[f.element_map[x]]);
  return h;
}

bool comparable_maps(const PosetMap& f, const PosetMap& g) {
  if (f.source != g.source || f.target != g.target)
    throw MapMismatchError("map comparison needs a common source and target");
  auto le = [&](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x = 0; x < f.source.n; ++x)
      if (a[x] != b[x] && !f.target.less(a[x], b[x])) return false;
    return true;
  };
  return le(f.element_map, g.element_map) || le(g.element_map, f.element_map);
}

namespace {

// BFS over order-preserving maps; steps move one element along a cover edge.
std::optional<std::vector<std::vector<int>>> fence_search(const PosetMap& f, const PosetMap& g,
                                                          const SearchLimits& lim) {
  if (f.source != g.source || f.target != g.target)
    throw MapMismatchError("homotopy needs a common source and target");
  if (!is_order_preserving(f) || !is_order_preserving(g))
    throw InvalidMapError("map is not order preserving");
  const FinitePoset& X = f.source;
  const FinitePoset& Y = f.target;
  std::vector<std::vector<int>> up(Y.n), down(Y.n);
  for (int y = 0; y < Y.n; ++y) {
    up[y] = covers_up(Y, y);
    down[y] = covers_down(Y, y);
  }
  auto still_preserving = [&](const std::vector<int>& h, int x) {
    for (int z = 0; z < X.n; ++z) {
      if (z == x) continue;
      if (X.less(z, x) && h[z] != h[x] && !Y.less(h[z], h[x])) return false;
      if (X.less(x, z) && h[x] != h[z] && !Y.less(h[x], h[z])) return false;
    }
    return true;
  };
  BudgetCounter budget(lim);
  std::map<std::vector<int>, std::vector<int>> parent;  // state -> predecessor
  std::deque<std::vector<int>> queue;
  parent[f.element_map] = {};
  queue.push_back(f.element_map);
  while (!queue.empty()) {
    budget.charge();
    std::vector<int> h = queue.front();
    queue.pop_front();
    if (h == g.element_map) {
      std::vector<std::vector<int>> chain;
      for (std::vector<int> s = h; !s.empty(); s = parent[s]) {
        chain.push_back(s);
        if (s == f.element_map) break;
      }
      std::reverse(chain.begin(), chain.end());
      return chain;
    }
    for (int x = 0; x < X.n; ++x) {
      int old = h[x];
      for (const auto* side : {&up[old], &down[old]}) {
        for (int y : *side) {
          h[x] = y;
          if (still_preserving(h, x) && !parent.count(h)) {
            parent[h] = [&] {
              std::vector<int> p = h;
              p[x] = old;
              return p;
            }();
            queue.push_back(h);
          }
        }
      }
      h[x] = old;
    }
  }
  return std::nullopt;
}

}  // namespace

Tri are_homotopic(const PosetMap& f, const PosetMap& g, const SearchLimits& lim) {
  try {
    return tri_of(fence_search(f, g, lim).has_value());
  } catch (const BudgetExceededError&) {
    return Tri::Unknown;
  }
}

std::optional<std::vector<PosetMap>> homotopy_chain(const PosetMap& f, const PosetMap& g,
                                                    const SearchLimits& lim) {
  auto chain = fence_search(f, g, lim);
  if (!chain) return std::nullopt;
  std::vector<PosetMap> out;
  out.reserve(chain->size());
  for (auto& m : *chain) out.push_back(PosetMap{f.source, f.target, std::move(m)});
  return out;
}

std::string to_string(const FinitePoset& X) {
  std::ostringstream os;
  os << X.n << " elements {";
  bool first = true;
  for (int x = 0; x < X.n; ++x)
    for (int y : covers_up(X, x)) {
      if (!first) os << ", ";
      os << X.labels[x] << "<" << X.labels[y];
      first = false;
    }
  os << "}";
  return os.str();
}

}  // namespace shtop
