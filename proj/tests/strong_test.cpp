#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "shtop/canonical.hpp"
#include "shtop/functors.hpp"
#include "shtop/strong.hpp"
#include "shtop/symmetry.hpp"
#include "shtop/workbench.hpp"
#include "util.hpp"

using namespace shtop;
using tu::cx;

TEST_CASE("domination pairs") {
  auto d2 = dominated_vertices(tu::simplex_n(2));
  CHECK(d2.size() == 6);  // every ordered pair of distinct vertices
  CHECK(d2.front() == std::pair<Vertex, Vertex>{0, 1});
  CHECK(d2.back() == std::pair<Vertex, Vertex>{2, 1});

  CHECK(dominated_vertices(tu::boundary_n(2)).empty());
  CHECK(dominated_vertices(tu::oct_minus()).empty());

  // isolated vertices have empty links and are never dominated
  SimplicialComplex mix = cx("facet a b\nfacet c\n");
  for (auto [v, w] : dominated_vertices(mix)) CHECK(mix.label(v) != "c");
}

TEST_CASE("minimality") {
  CHECK(is_minimal(cx("facet a\n")));
  CHECK_FALSE(is_minimal(tu::simplex_n(2)));
  CHECK(is_minimal(tu::boundary_n(2)));
  CHECK(is_minimal(tu::oct_minus()));
  CHECK(is_minimal(barycentric_complex(tu::boundary_n(2))));
}

TEST_CASE("core of a cone is a point") {
  SimplicialComplex cone = join(cx("facet apex\n"), tu::oct_minus());
  CoreResult r = core(cone);
  CHECK(r.complex.n == 1);
  CHECK(r.trace.moves.size() == (size_t)(cone.n - 1));
  TraceVerdict v = verify_trace(cone, r.trace, r.complex);
  CHECK(v.ok);
}

TEST_CASE("core of a minimal complex is itself") {
  SimplicialComplex bd = tu::boundary_n(2);
  CoreResult r = core(bd);
  CHECK(r.complex == bd);
  CHECK(r.trace.moves.empty());
}

TEST_CASE("core of the doubled boundary") {
  SimplicialComplex dbl = multiple(tu::boundary_n(2), 2);
  CHECK(dbl.n == 6);
  CoreResult r = core(dbl);
  CHECK(r.complex.n == 3);
  CHECK(is_isomorphic(r.complex, tu::boundary_n(2)));
  CHECK(verify_trace(dbl, r.trace, r.complex).ok);
}

TEST_CASE("core idempotence is exact") {
  for (uint64_t s : {1u, 2u, 3u, 4u, 5u}) {
    GeneratorConfig cfg;
    cfg.seed = s;
    cfg.mode = GenMode::GrownByDomination;
    SimplicialComplex K = gen_complex(cfg);
    SimplicialComplex c1 = core(K).complex;
    SimplicialComplex c2 = core(c1).complex;
    CHECK(c1 == c2);  // identical, not merely isomorphic
  }
}

TEST_CASE("deleting another vertex keeps a dominated vertex dominated") {
  for (uint64_t s = 0; s < 8; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 100 + s;
    cfg.mode = GenMode::GrownByDomination;
    SimplicialComplex K = gen_complex(cfg);
    auto doms = dominated_vertices(K);
    if (doms.empty() || K.n < 3) continue;
    Vertex v = doms.front().first;
    for (auto [u, w] : doms) {
      if (u == v) continue;
      SimplicialComplex D = delete_vertex(K, u);
      Vertex vd = D.vertex_by_label(K.label(v));
      bool still = false;
      for (auto [x, y] : dominated_vertices(D))
        if (x == vd) still = true;
      CHECK(still);
      break;
    }
  }
}

TEST_CASE("strong_collapses_to") {
  SimplicialComplex cone = join(cx("facet apex\n"), tu::boundary_n(2));
  Vertex apex = cone.vertex_by_label("apex");
  auto t = strong_collapses_to(cone, std::vector<Vertex>{apex});
  REQUIRE(t);
  SimplicialComplex target = full_subcomplex(cone, {apex});
  CHECK(verify_trace(cone, *t, target).ok);

  CHECK_FALSE(strong_collapses_to(tu::boundary_n(2), std::vector<Vertex>{0}));

  // label-addressed variant
  auto t2 = strong_collapses_to(cone, target);
  CHECK(t2);
}

TEST_CASE("vertices dominated from the target can always be peeled") {
  // grown complexes collapse back onto their seed
  SimplicialComplex seed = tu::boundary_n(2);
  for (uint64_t s = 0; s < 6; ++s) {
    Rng rng(500 + s);
    SimplicialComplex K = grow_by_domination(seed, 3, rng);
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < K.n; ++v)
      if (v < seed.n) keep.push_back(v);
    auto t = strong_collapses_to(K, keep);
    REQUIRE(t);
    CHECK(t->moves.size() == (size_t)(K.n - seed.n));
  }
}

TEST_CASE("strong collapsibility") {
  CHECK(is_strong_collapsible(tu::simplex_n(3)));
  CHECK_FALSE(is_strong_collapsible(tu::oct_minus()));
  CHECK_FALSE(is_strong_collapsible(tu::boundary_n(2)));

  // a strong collapsible factor forces the join
  SimplicialComplex j = join(tu::simplex_n(1), tu::boundary_n(2));
  CHECK(is_strong_collapsible(j));
}

TEST_CASE("same_strong_homotopy_type") {
  SimplicialComplex bd = tu::boundary_n(2);
  SimplicialComplex cone = join(cx("facet apex\n"), bd);
  SimplicialComplex pt = cx("facet p\n");
  CHECK(same_strong_homotopy_type(cone, pt));
  CHECK_FALSE(same_strong_homotopy_type(bd, cone));
  CHECK_FALSE(same_strong_homotopy_type(bd, barycentric_complex(bd)));
  CHECK(same_strong_homotopy_type(bd, multiple(bd, 2)));
}

TEST_CASE("domination retraction is contiguous to the identity") {
  SimplicialComplex d2 = tu::simplex_n(2);
  SimplicialMap r = domination_retraction(d2, 0, 1);
  CHECK(is_simplicial(r));
  CHECK(r.vertex_map[0] == 1);

  CHECK_THROWS_AS(domination_retraction(tu::boundary_n(2), 0, 1), InvalidWitnessError);

  for (uint64_t s = 0; s < 10; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 200 + s;
    cfg.mode = GenMode::GrownByDomination;
    SimplicialComplex K = gen_complex(cfg);
    auto doms = dominated_vertices(K);
    if (doms.empty()) continue;
    auto [v, w] = doms.front();
    SimplicialMap ret = domination_retraction(K, v, w);
    SimplicialMap inc = inclusion_map(ret.target, K);
    SimplicialMap round = compose(inc, ret);
    CHECK(are_contiguous(round, identity_map(K)));
  }
}

TEST_CASE("core never stalls above its minimal size") {
  // the greedy core tie-break is pinned: smallest vertex, smallest witness
  SimplicialComplex dbl = multiple(tu::boundary_n(2), 2);
  CoreResult r = core(dbl);
  REQUIRE_FALSE(r.trace.moves.empty());
  CHECK(r.trace.moves[0].kind == MoveKind::StrongDelete);
  std::set<std::string> alive(dbl.labels.begin(), dbl.labels.end());
  for (const auto& m : r.trace.moves) {
    CHECK(alive.count(m.a[0]));
    CHECK(alive.count(m.b[0]));
    alive.erase(m.a[0]);
  }
}
