#include "shtop/canonical.hpp"

#include <algorithm>
#include <sstream>

namespace shtop {
namespace {

// Re-rank arbitrary signature values to 0..k-1 preserving signature order.
template <class Sig>
std::vector<int> rank_signatures(const std::vector<Sig>& sigs) {
  std::vector<int> idx(sigs.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = (int)i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
  std::vector<int> out(sigs.size());
  int rank = 0;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i && sigs[idx[i]] != sigs[idx[i - 1]]) ++rank;
    out[idx[i]] = rank;
  }
  return out;
}

bool discrete(const std::vector<int>& colors) {
  int n = (int)colors.size();
  std::vector<char> seen(n, 0);
  for (int c : colors) {
    if (seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

// Smallest colour value with at least two members; -1 when discrete.
int target_cell(const std::vector<int>& colors) {
  int n = (int)colors.size();
  std::vector<int> count(n, 0);
  for (int c : colors) ++count[c];
  for (int c = 0; c < n; ++c)
    if (count[c] >= 2) return c;
  return -1;
}

std::vector<int> order_from_discrete(const std::vector<int>& colors) {
  std::vector<int> order(colors.size());
  for (size_t v = 0; v < colors.size(); ++v) order[v] = colors[v];
  return order;
}

struct ComplexCanonSearch {
  const SimplicialComplex& K;
  BudgetCounter budget;
  std::vector<std::vector<int>> vfacets;
  std::string best_key;
  std::vector<int> best_order;
  bool have_best = false;

  ComplexCanonSearch(const SimplicialComplex& k, const SearchLimits& lim) : K(k), budget(lim) {
    vfacets.resize(K.n);
    for (int i = 0; i < (int)K.facets.size(); ++i)
      for (Vertex v : K.facets[i]) vfacets[v].push_back(i);
  }

  std::vector<int> refine(std::vector<int> colors, const std::vector<int>& marks) {
    for (;;) {
      budget.charge();
      std::vector<std::vector<int>> fsig(K.facets.size());
      for (size_t i = 0; i < K.facets.size(); ++i) {
        for (Vertex v : K.facets[i]) fsig[i].push_back(colors[v]);
        std::sort(fsig[i].begin(), fsig[i].end());
      }
      std::vector<int> frank = rank_signatures(fsig);
      using VSig = std::tuple<int, int, std::vector<int>>;
      std::vector<VSig> vsig(K.n);
      for (int v = 0; v < K.n; ++v) {
        std::vector<int> fr;
        fr.reserve(vfacets[v].size());
        for (int i : vfacets[v]) fr.push_back(frank[i]);
        std::sort(fr.begin(), fr.end());
        vsig[v] = {colors[v], marks[v], std::move(fr)};
      }
      std::vector<int> next = rank_signatures(vsig);
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  std::string leaf_key(const std::vector<int>& order) const {
    std::vector<Simplex> mapped;
    mapped.reserve(K.facets.size());
    for (const auto& f : K.facets) {
      Simplex g;
      g.reserve(f.size());
      for (Vertex v : f) g.push_back(order[v]);
      std::sort(g.begin(), g.end());
      mapped.push_back(std::move(g));
    }
    std::sort(mapped.begin(), mapped.end(), simplex_lt);
    std::ostringstream os;
    os << "S|" << K.n << "|";
    for (const auto& g : mapped) {
      for (size_t j = 0; j < g.size(); ++j) os << (j ? "," : "") << g[j];
      os << ";";
    }
    return os.str();
  }

  void consider(const std::vector<int>& colors) {
    std::vector<int> order = order_from_discrete(colors);
    std::string key = leaf_key(order);
    if (!have_best || key < best_key) {
      best_key = std::move(key);
      best_order = std::move(order);
      have_best = true;
    }
  }

  void dfs(std::vector<int> colors, std::vector<int>& marks, int next_mark) {
    budget.charge();
    colors = refine(std::move(colors), marks);
    if (discrete(colors)) {
      consider(colors);
      return;
    }
    int cell = target_cell(colors);
    for (int v = 0; v < K.n; ++v) {
      if (colors[v] != cell) continue;
      marks[v] = next_mark;
      dfs(colors, marks, next_mark + 1);
      marks[v] = 0;
    }
  }

  Canonical run() {
    if (K.facets.size() == 1) {
      // Single facet: every vertex order gives the same image.
      std::vector<int> order(K.n);
      for (int v = 0; v < K.n; ++v) order[v] = v;
      return {leaf_key(order), order};
    }
    std::vector<int> colors(K.n, 0), marks(K.n, 0);
    dfs(std::move(colors), marks, 1);
    return {best_key, best_order};
  }
};

struct PosetCanonSearch {
  const FinitePoset& X;
  BudgetCounter budget;
  std::string best_key;
  std::vector<int> best_order;
  bool have_best = false;

  PosetCanonSearch(const FinitePoset& x, const SearchLimits& lim) : X(x), budget(lim) {}

  std::vector<int> refine(std::vector<int> colors, const std::vector<int>& marks) {
    for (;;) {
      budget.charge();
      using Sig = std::tuple<int, int, std::vector<int>, std::vector<int>>;
      std::vector<Sig> sig(X.n);
      for (int x = 0; x < X.n; ++x) {
        std::vector<int> lo, hi;
        for (int y : X.below[x].members()) lo.push_back(colors[y]);
        for (int y : X.above[x].members()) hi.push_back(colors[y]);
        std::sort(lo.begin(), lo.end());
        std::sort(hi.begin(), hi.end());
        sig[x] = {colors[x], marks[x], std::move(lo), std::move(hi)};
      }
      std::vector<int> next = rank_signatures(sig);
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  std::string leaf_key(const std::vector<int>& order) const {
    std::vector<int> inv(X.n);
    for (int x = 0; x < X.n; ++x) inv[order[x]] = x;
    std::ostringstream os;
    os << "P|" << X.n << "|";
    for (int i = 0; i < X.n; ++i) {
      for (int j = 0; j < X.n; ++j) os << (X.less(inv[i], inv[j]) ? '1' : '0');
      os << ";";
    }
    return os.str();
  }

  void consider(const std::vector<int>& colors) {
    std::vector<int> order = order_from_discrete(colors);
    std::string key = leaf_key(order);
    if (!have_best || key < best_key) {
      best_key = std::move(key);
      best_order = std::move(order);
      have_best = true;
    }
  }

  void dfs(std::vector<int> colors, std::vector<int>& marks, int next_mark) {
    budget.charge();
    colors = refine(std::move(colors), marks);
    if (discrete(colors)) {
      consider(colors);
      return;
    }
    int cell = target_cell(colors);
    for (int x = 0; x < X.n; ++x) {
      if (colors[x] != cell) continue;
      marks[x] = next_mark;
      dfs(colors, marks, next_mark + 1);
      marks[x] = 0;
    }
  }

  Canonical run() {
    if (X.n == 0) return {"P|0|", {}};
    std::vector<int> colors(X.n, 0), marks(X.n, 0);
    dfs(std::move(colors), marks, 1);
    return {best_key, best_order};
  }
};

}  // namespace

Canonical canonicalize(const SimplicialComplex& K, const SearchLimits& lim) {
  return ComplexCanonSearch(K, lim).run();
}

Canonical canonicalize(const FinitePoset& X, const SearchLimits& lim) {
  return PosetCanonSearch(X, lim).run();
}

std::string canonical_form(const SimplicialComplex& K, const SearchLimits& lim) {
  return canonicalize(K, lim).key;
}

std::string canonical_form(const FinitePoset& X, const SearchLimits& lim) {
  return canonicalize(X, lim).key;
}

std::optional<SimplicialMap> is_isomorphic(const SimplicialComplex& K, const SimplicialComplex& L,
                                           const SearchLimits& lim) {
  if (K.n != L.n || K.facets.size() != L.facets.size()) return std::nullopt;
  Canonical ck = canonicalize(K, lim);
  Canonical cl = canonicalize(L, lim);
  if (ck.key != cl.key) return std::nullopt;
  std::vector<int> inv(L.n);
  for (int v = 0; v < L.n; ++v) inv[cl.order[v]] = v;
  SimplicialMap f{K, L, std::vector<int>(K.n)};
  for (int v = 0; v < K.n; ++v) f.vertex_map[v] = inv[ck.order[v]];
  for (const auto& fac : K.facets) {
    Simplex img = map_simplex(f, fac);
    if (img.size() != fac.size() ||
        !std::binary_search(L.facets.begin(), L.facets.end(), img,
                            [](const Simplex& a, const Simplex& b) { return simplex_lt(a, b); }))
      throw Error("canonical orders disagree with facet structure");
  }
  return f;
}

std::optional<PosetMap> are_homeomorphic(const FinitePoset& X, const FinitePoset& Y,
                                         const SearchLimits& lim) {
  if (X.n != Y.n) return std::nullopt;
  Canonical cx = canonicalize(X, lim);
  Canonical cy = canonicalize(Y, lim);
  if (cx.key != cy.key) return std::nullopt;
  std::vector<int> inv(Y.n);
  for (int y = 0; y < Y.n; ++y) inv[cy.order[y]] = y;
  PosetMap f{X, Y, std::vector<int>(X.n)};
  for (int x = 0; x < X.n; ++x) f.element_map[x] = inv[cx.order[x]];
  for (int x = 0; x < X.n; ++x)
    for (int y = 0; y < X.n; ++y)
      if (X.less(x, y) != Y.less(f.element_map[x], f.element_map[y]))
        throw Error("canonical orders disagree with the order relation");
  return f;
}

}  // namespace shtop
