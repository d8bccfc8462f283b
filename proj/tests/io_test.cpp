#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "shtop/io.hpp"
#include "util.hpp"

using namespace shtop;

TEST_CASE("complex parsing") {
  SimplicialComplex K = parse_complex("facet a b c\n");
  CHECK(K.n == 3);
  CHECK(K.facets.size() == 1);

  // non-maximal input lines are pruned
  SimplicialComplex P = parse_complex("facet a b\nfacet a b c\n");
  CHECK(P.facets.size() == 1);
  CHECK(P.facets[0].size() == 3);

  SimplicialComplex O = parse_complex("# comment\n\nfacet x1 y_2\n");
  CHECK(O.n == 2);

  CHECK_THROWS_AS(parse_complex(""), EmptyComplexError);
  CHECK_THROWS_AS(parse_complex("# only\n"), EmptyComplexError);
  CHECK_THROWS_AS(parse_complex("facet a a\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("facet a-b\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("vertex a\n"), ParseError);
  CHECK_THROWS_AS(parse_complex("facet\n"), ParseError);
}

TEST_CASE("complex rendering sorts facets by size then labels") {
  SimplicialComplex K = parse_complex("facet b c d\nfacet a z\nfacet a b\n");
  std::string out = render_complex(K);
  CHECK(out == "facet a b\nfacet a z\nfacet b c d\n");
  SimplicialComplex back = parse_complex(out);
  CHECK(back.facets.size() == K.facets.size());
  CHECK(canonical_form(back) == canonical_form(K));
}

TEST_CASE("poset parsing") {
  FinitePoset X = parse_poset("point a\nrel a b\nrel b c\n");
  CHECK(X.n == 3);
  CHECK(X.less(0, 2));  // transitive closure
  CHECK_FALSE(X.less(2, 0));

  CHECK_THROWS_AS(parse_poset("rel a b\nrel b a\n"), AntisymmetryError);
  CHECK_THROWS_AS(parse_poset("rel a a\n"), ParseError);
  CHECK_THROWS_AS(parse_poset(""), ParseError);
  CHECK_THROWS_AS(parse_poset("point\n"), ParseError);
  CHECK_THROWS_AS(parse_poset("edge a b\n"), ParseError);
}

TEST_CASE("poset round trip preserves the order") {
  FinitePoset X = tu::vee_p();
  FinitePoset Y = parse_poset(render_poset(X));
  CHECK(Y.n == X.n);
  CHECK(canonical_form(X) == canonical_form(Y));
}

TEST_CASE("trace parsing covers every move kind") {
  MoveTrace t = parse_trace(
      "SD a by b\n"
      "CC a b | a b c\n"
      "NE v level 2\n"
      "BR x up\n"
      "BR y down\n"
      "WR z\n");
  REQUIRE(t.moves.size() == 6);
  CHECK(t.moves[0].kind == MoveKind::StrongDelete);
  CHECK(t.moves[0].a == std::vector<std::string>{"a"});
  CHECK(t.moves[0].b == std::vector<std::string>{"b"});
  CHECK(t.moves[1].kind == MoveKind::FreeFaceCollapse);
  CHECK(t.moves[1].b == std::vector<std::string>{"a", "b", "c"});
  CHECK(t.moves[2].level == 2);
  CHECK(t.moves[3].dir == BeatDir::Up);
  CHECK(t.moves[4].dir == BeatDir::Down);
  CHECK(t.moves[5].kind == MoveKind::WeakRemove);

  CHECK(parse_trace("# nothing\n").moves.empty());
  CHECK_THROWS_AS(parse_trace("SD a\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("CC a b c\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("NE v level x\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("BR x sideways\n"), ParseError);
}

TEST_CASE("trace round trip is exact") {
  MoveTrace t;
  t.moves.push_back(strong_delete("a", "b"));
  t.moves.push_back(free_face_collapse({"a", "c"}, {"a", "b", "c"}));
  t.moves.push_back(ne_delete("q", 1));
  t.moves.push_back(beat_remove("x", BeatDir::Down));
  t.moves.push_back(weak_remove("y"));
  MoveTrace u = parse_trace(render_trace(t));
  REQUIRE(u.moves.size() == t.moves.size());
  for (size_t i = 0; i < t.moves.size(); ++i) CHECK(u.moves[i] == t.moves[i]);
}

TEST_CASE("file save and load") {
  std::string dir = "io_test_tmp";
  std::remove((dir + ".scx").c_str());
  SimplicialComplex K = tu::oct_minus();
  save_complex(K, dir + ".scx");
  SimplicialComplex K2 = load_complex(dir + ".scx");
  CHECK(K2.n == K.n);
  CHECK(K2.facets == K.facets);

  FinitePoset X = tu::chain_p(4);
  save_poset(X, dir + ".fsp");
  FinitePoset X2 = load_poset(dir + ".fsp");
  CHECK(canonical_form(X) == canonical_form(X2));

  MoveTrace t;
  t.moves.push_back(strong_delete("v0", "v1"));
  save_trace(t, dir + ".trc");
  MoveTrace t2 = load_trace(dir + ".trc");
  REQUIRE(t2.moves.size() == 1);
  CHECK(t2.moves[0] == t.moves[0]);

  CHECK_THROWS(load_complex("no_such_file.scx"));
  std::remove((dir + ".scx").c_str());
  std::remove((dir + ".fsp").c_str());
  std::remove((dir + ".trc").c_str());
}
