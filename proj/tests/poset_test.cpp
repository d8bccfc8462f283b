#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "shtop/canonical.hpp"
#include "shtop/functors.hpp"
#include "shtop/poset.hpp"
#include "shtop/workbench.hpp"
#include "util.hpp"

using namespace shtop;

TEST_CASE("up, down and link sets") {
  FinitePoset chain = tu::chain_p(3);
  CHECK(down_set(chain, 1) == std::vector<int>{0});
  CHECK(up_set(chain, 1) == std::vector<int>{2});
  FinitePoset lk = link_hat(chain, 1);
  CHECK(lk.n == 2);
  CHECK_FALSE(lk.less(0, 1));
  CHECK_FALSE(lk.less(1, 0));

  FinitePoset anti = tu::antichain_p(3);
  for (int x = 0; x < 3; ++x) {
    CHECK(up_set(anti, x).empty());
    CHECK(down_set(anti, x).empty());
    CHECK(link_hat(anti, x).n == 0);
  }

  // at an edge of the triangle boundary the open part below has the two ends
  FacePosetResult fp = face_poset(tu::boundary_n(2));
  int edge = -1;
  for (int i = 0; i < fp.poset.n; ++i)
    if (fp.simplices[i].size() == 2) edge = i;
  REQUIRE(edge >= 0);
  CHECK(down_set(fp.poset, edge).size() == 2);
  CHECK(up_set(fp.poset, edge).empty());

  CHECK_THROWS_AS(up_set(chain, 5), UnknownElementError);
}

TEST_CASE("beat points") {
  auto chain_beats = beat_points(tu::chain_p(3));
  CHECK(chain_beats.size() == 3);  // every element of a chain

  CHECK(beat_points(face_poset(tu::boundary_n(2)).poset).empty());

  // in the face poset of an edge both vertices sit under the single top cell
  FacePosetResult seg = face_poset(tu::simplex_n(1));
  auto beats = beat_points(seg.poset);
  REQUIRE(beats.size() == 2);
  for (auto [x, dir] : beats) {
    CHECK(dir == BeatDir::Up);
    CHECK(seg.simplices[x].size() == 1);
  }

  CHECK(beat_points(tu::antichain_p(4)).empty());
}

TEST_CASE("poset core") {
  PosetCoreResult chain = poset_core(tu::chain_p(5));
  CHECK(chain.core.n == 1);
  CHECK(verify_trace(tu::chain_p(5), chain.trace, chain.core).ok);

  FinitePoset bd = face_poset(tu::boundary_n(2)).poset;
  PosetCoreResult fixed = poset_core(bd);
  CHECK(fixed.core.n == bd.n);
  CHECK(fixed.trace.moves.empty());

  PosetCoreResult simplex = poset_core(face_poset(tu::simplex_n(2)).poset);
  CHECK(simplex.core.n == 1);
}

TEST_CASE("contractibility") {
  CHECK(is_contractible(tu::chain_p(4)));
  // any poset with a maximum peels down to it
  FinitePoset vee = tu::vee_p();
  CHECK(is_contractible(vee));
  CHECK_FALSE(is_contractible(face_poset(tu::boundary_n(2)).poset));
  CHECK_FALSE(is_contractible(tu::antichain_p(2)));
}

TEST_CASE("weak points") {
  CHECK(weak_points(face_poset(tu::boundary_n(2)).poset).empty());
  // empty links disqualify: an antichain has no weak points
  CHECK(weak_points(tu::antichain_p(3)).empty());

  // every beat point is weak
  for (uint64_t s = 0; s < 12; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 40 + s;
    cfg.mode = GenMode::GrownByBeatPoints;
    FinitePoset X = gen_poset(cfg);
    auto weak = weak_points(X);
    for (auto [x, dir] : beat_points(X))
      CHECK(std::find(weak.begin(), weak.end(), x) != weak.end());
  }
}

TEST_CASE("weak collapse of the truncated octahedron face poset") {
  FinitePoset X = face_poset(tu::oct_minus()).poset;
  PosetCollapseResult r = poset_collapses_to_point(X, SearchLimits{4'000'000});
  CHECK(r.verdict == Tri::True);
  REQUIRE(r.trace);
  FinitePoset pt = make_poset(1, {}, {r.trace->moves.back().a[0]});
  CHECK(verify_trace(X, *r.trace, pt).ok);
}

TEST_CASE("no weak points means no collapse") {
  PosetCollapseResult r = poset_collapses_to_point(face_poset(tu::boundary_n(2)).poset);
  CHECK(r.verdict == Tri::False);
  CHECK_FALSE(r.trace);
}

TEST_CASE("contractible posets collapse") {
  for (uint64_t s = 0; s < 10; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 70 + s;
    cfg.mode = GenMode::GrownByBeatPoints;
    FinitePoset X = gen_poset(cfg);
    if (!is_contractible(X)) continue;
    PosetCollapseResult r = poset_collapses_to_point(X);
    CHECK(r.verdict == Tri::True);
  }
}

TEST_CASE("poset non-evasiveness") {
  CHECK(poset_non_evasive(make_poset(1, {})) == Tri::True);

  // an element comparable with everything keeps the recursion alive
  FinitePoset cone = make_poset(4, {{0, 3}, {1, 3}, {2, 3}});
  CHECK(poset_non_evasive(cone) == Tri::True);

  CHECK(poset_non_evasive(face_poset(tu::boundary_n(2)).poset) == Tri::False);

  // collapsible spaces are non-evasive
  for (uint64_t s = 0; s < 8; ++s) {
    GeneratorConfig cfg;
    cfg.seed = 90 + s;
    cfg.mode = GenMode::GrownByBeatPoints;
    FinitePoset X = gen_poset(cfg);
    if (poset_collapses_to_point(X).verdict != Tri::True) continue;
    CHECK(poset_non_evasive(X) == Tri::True);
  }
}

TEST_CASE("greedy reach of a strong deformation retract") {
  for (uint64_t s = 0; s < 10; ++s) {
    Rng rng(600 + s);
    FinitePoset seed = face_poset(tu::boundary_n(2)).poset;
    FinitePoset X = grow_by_beat_points(seed, 4, rng);
    std::vector<int> keep;
    for (int x = 0; x < seed.n; ++x) keep.push_back(x);
    auto t = poset_strong_collapses_to(X, keep);
    REQUIRE(t);
    CHECK(t->moves.size() == 4);
    CHECK(verify_trace(X, *t, seed).ok);
  }
  // an unreachable target fails cleanly
  CHECK_FALSE(poset_strong_collapses_to(face_poset(tu::boundary_n(2)).poset, {0}));
}

TEST_CASE("ne collapse with a kept set") {
  FinitePoset X = face_poset(tu::simplex_n(2)).poset;
  auto t = poset_ne_collapses_to(X, {0});
  REQUIRE(t);
  CHECK(t->moves.size() == (size_t)(X.n - 1));
  CHECK(verify_trace(X, *t, subposet(X, {0})).ok);
}

TEST_CASE("order-preserving maps and homotopy") {
  FinitePoset vee = tu::vee_p();
  PosetMap id = identity_poset_map(vee);
  CHECK(is_order_preserving(id));
  CHECK(are_homotopic(id, id) == Tri::True);

  // constant at the maximum is homotopic to the identity
  PosetMap cmax{vee, vee, {2, 2, 2}};
  CHECK(is_order_preserving(cmax));
  CHECK(comparable_maps(id, cmax));
  CHECK(are_homotopic(id, cmax) == Tri::True);
  auto chain = homotopy_chain(id, cmax);
  REQUIRE(chain);
  CHECK(chain->front().element_map == id.element_map);
  CHECK(chain->back().element_map == cmax.element_map);
  for (size_t i = 0; i + 1 < chain->size(); ++i)
    CHECK(comparable_maps((*chain)[i], (*chain)[i + 1]));

  // maps from a point land in comparability components
  FinitePoset pt = make_poset(1, {});
  FinitePoset two = tu::antichain_p(2);
  PosetMap into0{pt, two, {0}};
  PosetMap into1{pt, two, {1}};
  CHECK(are_homotopic(into0, into1) == Tri::False);
  FinitePoset joined = tu::vee_p();
  PosetMap j0{pt, joined, {0}};
  PosetMap j1{pt, joined, {1}};
  CHECK(are_homotopic(j0, j1) == Tri::True);

  PosetMap not_monotone{vee, vee, {2, 2, 0}};
  CHECK_FALSE(is_order_preserving(not_monotone));
}

TEST_CASE("order isomorphism") {
  FinitePoset chain = tu::chain_p(3);
  FinitePoset rev = make_poset(3, {{2, 1}, {1, 0}});
  auto iso = are_homeomorphic(chain, rev);
  REQUIRE(iso);
  CHECK(is_order_preserving(*iso));

  CHECK_FALSE(are_homeomorphic(chain, tu::vee_p()));
  CHECK_FALSE(are_homeomorphic(chain, tu::antichain_p(3)));

  // cores of spaces grown over the same seed are homeomorphic
  for (uint64_t s = 0; s < 6; ++s) {
    Rng r1(900 + s), r2(950 + s);
    FinitePoset seed = face_poset(tu::boundary_n(2)).poset;
    FinitePoset a = grow_by_beat_points(seed, 3, r1);
    FinitePoset b = grow_by_beat_points(seed, 2, r2);
    CHECK(are_homeomorphic(poset_core(a).core, poset_core(b).core));
  }
}

TEST_CASE("subposet keeps the induced order") {
  FinitePoset chain = tu::chain_p(4);
  FinitePoset sub = subposet(chain, {0, 2, 3});
  CHECK(sub.n == 3);
  CHECK(sub.less(0, 1));
  CHECK(sub.less(1, 2));
  CHECK(sub.label(1) == "x2");
}
