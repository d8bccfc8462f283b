#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "shtop/canonical.hpp"
#include "shtop/workbench.hpp"
#include "util.hpp"

using namespace shtop;
using tu::cx;

namespace {

// Permutation exhaustion, usable up to ~8 vertices.
bool brute_iso(const SimplicialComplex& K, const SimplicialComplex& L) {
  if (K.n != L.n || K.facets.size() != L.facets.size()) return false;
  std::vector<int> perm(K.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Simplex> target(L.facets.begin(), L.facets.end());
  do {
    bool ok = true;
    for (const auto& f : K.facets) {
      Simplex img;
      for (Vertex v : f) img.push_back(perm[v]);
      std::sort(img.begin(), img.end());
      if (!target.count(img)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

SimplicialComplex shuffled(const SimplicialComplex& K, Rng& rng) {
  std::vector<int> perm(K.n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = K.n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<Simplex> facets;
  for (const auto& f : K.facets) {
    Simplex g;
    for (Vertex v : f) g.push_back(perm[v]);
    std::sort(g.begin(), g.end());
    facets.push_back(g);
  }
  std::vector<std::string> labels(K.n);
  for (int v = 0; v < K.n; ++v) labels[perm[v]] = K.labels[v];
  return make_complex(K.n, facets, labels);
}

}  // namespace

TEST_CASE("relabelings share a key") {
  SimplicialComplex a = cx("facet a b\nfacet b c\nfacet c a\n");
  SimplicialComplex b = cx("facet x y\nfacet z x\nfacet y z\n");
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(is_isomorphic(a, b));
}

TEST_CASE("non-isomorphic complexes get distinct keys") {
  CHECK(canonical_form(tu::boundary_n(2)) != canonical_form(tu::path_c(3)));
  CHECK(canonical_form(tu::boundary_n(2)) != canonical_form(tu::simplex_n(2)));
  CHECK_FALSE(is_isomorphic(tu::boundary_n(2), tu::simplex_n(2)));
}

TEST_CASE("key ignores facet input order") {
  SimplicialComplex a = cx("facet a b\nfacet c d\n");
  SimplicialComplex b = cx("facet c d\nfacet a b\n");
  CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("isomorphism returns a facet-preserving bijection") {
  Rng rng(7);
  SimplicialComplex K = tu::oct_minus();
  SimplicialComplex L = shuffled(K, rng);
  auto iso = is_isomorphic(K, L);
  REQUIRE(iso);
  std::set<Simplex> target(L.facets.begin(), L.facets.end());
  std::vector<char> hit(K.n, 0);
  for (Vertex v = 0; v < K.n; ++v) {
    REQUIRE(iso->vertex_map[v] >= 0);
    REQUIRE(iso->vertex_map[v] < L.n);
    hit[iso->vertex_map[v]] = 1;
  }
  CHECK(std::count(hit.begin(), hit.end(), 1) == K.n);
  for (const auto& f : K.facets) {
    Simplex img = map_simplex(*iso, f);
    CHECK(target.count(img));
  }
}

TEST_CASE("canonical order relabels onto the key") {
  SimplicialComplex K = tu::oct_minus();
  Canonical c = canonicalize(K);
  CHECK((int)c.order.size() == K.n);
  // applying the order and canonicalizing again is stable
  std::vector<Simplex> facets;
  for (const auto& f : K.facets) {
    Simplex g;
    for (Vertex v : f) g.push_back(c.order[v]);
    std::sort(g.begin(), g.end());
    facets.push_back(g);
  }
  SimplicialComplex R = make_complex(K.n, facets);
  CHECK(canonical_form(R) == c.key);
}

TEST_CASE("agreement with permutation exhaustion on small instances") {
  GeneratorConfig cfg;
  cfg.max_vertices = 6;
  cfg.max_facets = 7;
  cfg.facet_size_range = {1, 3};
  std::vector<SimplicialComplex> pool;
  for (uint64_t s = 0; s < 40; ++s) {
    cfg.seed = s;
    pool.push_back(gen_complex(cfg));
  }
  int isomorphic_pairs = 0;
  for (size_t i = 0; i < pool.size(); ++i)
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (pool[i].n > 6 || pool[j].n > 6) continue;
      bool expected = brute_iso(pool[i], pool[j]);
      bool by_key = canonical_form(pool[i]) == canonical_form(pool[j]);
      bool by_map = is_isomorphic(pool[i], pool[j]).has_value();
      CHECK(by_key == expected);
      CHECK(by_map == expected);
      if (expected) ++isomorphic_pairs;
    }
  // the corpus is expected to contain at least one colliding pair
  CHECK(isomorphic_pairs > 0);
}

TEST_CASE("poset keys separate order types") {
  FinitePoset chain = tu::chain_p(3);
  FinitePoset chain2 = make_poset(3, {{2, 1}, {1, 0}});
  CHECK(canonical_form(chain) == canonical_form(chain2));
  CHECK(canonical_form(chain) != canonical_form(tu::vee_p()));
  CHECK(canonical_form(chain) != canonical_form(tu::antichain_p(3)));

  Canonical c = canonicalize(tu::vee_p());
  CHECK(c.order.size() == 3);
}
