#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "shtop/canonical.hpp"
#include "shtop/nerve.hpp"
#include "shtop/workbench.hpp"
#include "util.hpp"

using namespace shtop;
using tu::cx;

TEST_CASE("nerve of a simplex is a point") {
  SimplicialComplex N = nerve(tu::simplex_n(3));
  CHECK(N.n == 1);
}

TEST_CASE("nerve vertex count equals facet count") {
  for (const SimplicialComplex& K :
       {tu::boundary_n(2), tu::oct_minus(), tu::cycle_c(5), tu::path_c(4)}) {
    CHECK(nerve(K).n == (int)K.facets.size());
  }
}

TEST_CASE("nerve of the triangle boundary is a triangle boundary") {
  SimplicialComplex N = nerve(tu::boundary_n(2));
  CHECK(N.n == 3);
  CHECK(is_isomorphic(N, tu::boundary_n(2)));
}

TEST_CASE("the truncated octahedron grows under one nerve and returns under two") {
  SimplicialComplex K = tu::oct_minus();
  SimplicialComplex N = nerve(K);
  CHECK(N.n == 7);
  CHECK(N.n > K.n);
  SimplicialComplex N2 = nerve(N);
  CHECK(is_isomorphic(N2, K));
}

TEST_CASE("nerve tower endpoints") {
  auto tower = nerve_tower(tu::simplex_n(2), 8);
  REQUIRE(tower.size() == 2);
  CHECK(tower[1].n == 1);

  auto stable = nerve_tower(tu::boundary_n(2), 8);
  // entries alternate between isomorphic copies, never reaching a point
  CHECK(stable.size() >= 3);
  CHECK(is_isomorphic(stable[0], stable[2]));
  for (const auto& t : stable) CHECK(t.n > 1);

  auto oct = nerve_tower(tu::oct_minus(), 8);
  CHECK(oct.size() >= 3);
  CHECK(is_isomorphic(oct[2], tu::oct_minus()));
  for (const auto& t : oct) CHECK(t.n > 1);
}

TEST_CASE("square nerve embedding on a simplex") {
  SquareNerveEmbedding e = embed_square_nerve(tu::simplex_n(2));
  CHECK(e.image.n == 1);
  CHECK(e.trace.moves.size() == 2);
  CHECK(verify_trace(tu::simplex_n(2), e.trace, e.image).ok);
}

TEST_CASE("square nerve embedding on a minimal complex is the identity") {
  SimplicialComplex K = tu::oct_minus();
  SquareNerveEmbedding e = embed_square_nerve(K);
  CHECK(e.image.n == K.n);
  CHECK(e.trace.moves.empty());
  CHECK(is_isomorphic(e.image, K));
}

TEST_CASE("square nerve embedding lands on a full subcomplex") {
  for (uint64_t s = 0; s < 15; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 300 + s;
    cfg.mode = s % 2 ? GenMode::GrownByDomination : GenMode::UniformFacets;
    SimplicialComplex K = gen_complex(cfg);
    SquareNerveEmbedding e = embed_square_nerve(K);

    SimplicialComplex N2 = nerve(nerve(K));
    CHECK(is_isomorphic(e.image, N2));
    CHECK(is_simplicial(e.map));
    CHECK(verify_trace(K, e.trace, e.image).ok);

    // vertices outside the image are dominated by vertices inside it
    std::vector<char> inside(K.n, 0);
    for (const auto& lbl : e.image.labels) inside[K.vertex_by_label(lbl)] = 1;
    auto doms = dominated_vertices(K);
    for (Vertex v = 0; v < K.n; ++v) {
      if (inside[v]) continue;
      bool covered = false;
      for (auto [x, w] : doms)
        if (x == v && inside[w]) covered = true;
      CHECK(covered);
    }
  }
}

TEST_CASE("core via the nerve tower") {
  CHECK(core_via_nerve(join(cx("facet apex\n"), tu::boundary_n(2))).n == 1);
  CHECK(is_isomorphic(core_via_nerve(tu::oct_minus()), tu::oct_minus()));

  for (uint64_t s = 0; s < 20; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 400 + s;
    cfg.mode = GenMode::GrownByDomination;
    SimplicialComplex K = gen_complex(cfg);
    CHECK(is_isomorphic(core_via_nerve(K), core(K).complex));
  }
}

TEST_CASE("strong collapsibility via the nerve tower") {
  CHECK(strong_collapsible_via_nerve(tu::simplex_n(4)));
  CHECK_FALSE(strong_collapsible_via_nerve(tu::boundary_n(2)));
  CHECK_FALSE(strong_collapsible_via_nerve(tu::oct_minus()));

  for (uint64_t s = 0; s < 40; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 4000 + s;
    cfg.max_vertices = 7;
    cfg.mode = s % 2 ? GenMode::GrownByDomination : GenMode::UniformFacets;
    SimplicialComplex K = gen_complex(cfg);
    CHECK(strong_collapsible_via_nerve(K) == is_strong_collapsible(K));
  }
}

TEST_CASE("even tower entries shrink monotonically") {
  for (uint64_t s = 0; s < 10; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 800 + s;
    SimplicialComplex K = gen_complex(cfg);
    auto tower = nerve_tower(K, 10);
    for (size_t i = 0; i + 2 < tower.size(); i += 2) {
      CHECK(tower[i + 2].n <= tower[i].n);
      if (tower[i + 2].n == tower[i].n) CHECK(is_isomorphic(tower[i], tower[i + 2]));
    }
  }
}
