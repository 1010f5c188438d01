#include <doctest.h>

#include <random>

#include "example_surfaces.hpp"
#include "tss/error.hpp"
#include "tss/json_io.hpp"
#include "tss/surface.hpp"

using namespace tss;

namespace {

bool has_violation(const ValidationReport& r, const std::string& code) {
  for (const auto& v : r.violations) {
    if (v.code == code) return true;
  }
  return false;
}

const char* kCyl1Doc = R"({
  "closed": false,
  "leaves": [
    { "id": "Lpos", "genus": 0, "sign": "+", "volume": "3", "free_boundary": 1 },
    { "id": "Lneg", "genus": 0, "sign": "-", "volume": "-3", "free_boundary": 1 }
  ],
  "curves": [
    { "id": "T", "period": "44/7", "neg": "Lneg", "pos": "Lpos" }
  ]
})";

}  // namespace

TEST_CASE("parse_tss round-trips the one-curve cylinder document") {
  TssSurface s = parse_tss(kCyl1Doc);
  CHECK(s.leaves.size() == 2);
  CHECK(s.curves.size() == 1);
  CHECK(s.curves[0].period == Rational::parse("44/7"));
  CHECK(validate(s).valid());
  CHECK(s == examples::cyl1());
}

TEST_CASE("parse_tss rejects malformed documents") {
  CHECK_THROWS_AS(parse_tss("{"), ParseError);
  CHECK_THROWS_AS(parse_tss("[1,2]"), ParseError);

  // Dangling leaf reference.
  CHECK_THROWS_WITH_AS(
      parse_tss(R"({"closed": false,
                    "leaves": [{ "id": "L1", "genus": 0, "sign": "+", "volume": "1",
                                 "free_boundary": 1 }],
                    "curves": [{ "id": "T", "period": "1", "neg": "L9", "pos": "L1" }]})"),
      doctest::Contains("missing leaf L9"), ParseError);

  // Unknown key.
  CHECK_THROWS_WITH_AS(
      parse_tss(R"({"closed": true, "leaves": [], "curves": [], "extra": 1})"),
      doctest::Contains("unknown key"), ParseError);

  // Non-positive period.
  CHECK_THROWS_WITH_AS(
      parse_tss(R"({"closed": false,
                    "leaves": [{ "id": "A", "genus": 0, "sign": "+", "volume": "1",
                                 "free_boundary": 1 },
                               { "id": "B", "genus": 0, "sign": "-", "volume": "-1",
                                 "free_boundary": 1 }],
                    "curves": [{ "id": "T", "period": "0", "neg": "B", "pos": "A" }]})"),
      doctest::Contains("must be positive"), ParseError);

  // Bad sign token, bad genus.
  CHECK_THROWS_AS(
      parse_tss(R"({"closed": true,
                    "leaves": [{ "id": "A", "genus": 0, "sign": "plus", "volume": "1",
                                 "free_boundary": 0 }],
                    "curves": []})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_tss(R"({"closed": true,
                    "leaves": [{ "id": "A", "genus": -1, "sign": "+", "volume": "1",
                                 "free_boundary": 0 }],
                    "curves": []})"),
      ParseError);
}

TEST_CASE("parse of two-curve cylinder document of the explicit model") {
  TssSurface s = parse_tss(to_json(examples::cyl2()).dump());
  CHECK(s.leaves.size() == 3);
  CHECK(s.curves.size() == 2);
  CHECK(s.curves[0].period == s.curves[1].period);
  CHECK(validate(s).valid());
}

TEST_CASE("validate accepts the standard examples") {
  CHECK(validate(examples::cyl1()).valid());
  CHECK(validate(examples::cyl2()).valid());
  CHECK(validate(examples::sphere_equator()).valid());
  CHECK(validate(examples::torus_parallel(2)).valid());
  CHECK(validate(examples::cylinder_chain(4)).valid());
  CHECK(validate(examples::genus2_separating()).valid());
}

TEST_CASE("validate reports sign bipartiteness violations") {
  TssSurface s = examples::sphere_equator();
  s.leaves[1].sign = +1;  // both sides positive now
  s.leaves[1].volume = Rational(1);
  ValidationReport r = validate(s);
  CHECK_FALSE(r.valid());
  CHECK(has_violation(r, "sign-bipartiteness"));
}

TEST_CASE("validate reports structural violations") {
  SUBCASE("no curves") {
    TssSurface s;
    s.closed = true;
    s.leaves = {{"L", 0, +1, Rational(1), 0}};
    CHECK(has_violation(validate(s), "no-zero-curve"));
    CHECK(has_violation(validate(s), "isolated-leaf"));
  }
  SUBCASE("curve bounding one leaf on both sides") {
    TssSurface s = examples::cyl1();
    s.curves[0].neg_leaf = "Lpos";
    CHECK(has_violation(validate(s), "curve-bounds-same-leaf"));
  }
  SUBCASE("volume sign mismatch and zero volume") {
    TssSurface s = examples::cyl1();
    s.leaves[0].volume = Rational(-2);
    CHECK(has_violation(validate(s), "volume-sign"));
    s.leaves[0].volume = Rational(0);
    CHECK(has_violation(validate(s), "volume-sign"));
  }
  SUBCASE("free boundary on a closed surface") {
    TssSurface s = examples::sphere_equator();
    s.leaves[0].free_boundary = 1;
    CHECK(has_violation(validate(s), "free-boundary-on-closed"));
  }
  SUBCASE("euler parity") {
    TssSurface s = examples::cyl1();
    s.leaves[0].free_boundary = 2;  // sum of leaf characteristics now odd
    CHECK(has_violation(validate(s), "euler-parity"));
  }
  SUBCASE("disconnected incidence graph") {
    TssSurface s = examples::torus_parallel(2);
    TssSurface t = examples::torus_parallel(2);
    for (auto& l : t.leaves) {
      l.id += "x";
      s.leaves.push_back(l);
    }
    for (auto& c : t.curves) {
      c.id += "x";
      c.neg_leaf += "x";
      c.pos_leaf += "x";
      s.curves.push_back(c);
    }
    CHECK(has_violation(validate(s), "disconnected"));
  }
  SUBCASE("dangling reference is a violation too") {
    TssSurface s = examples::cyl1();
    s.curves[0].pos_leaf = "L9";
    CHECK(has_violation(validate(s), "dangling-leaf-reference"));
  }
}

TEST_CASE("torus with two parallel curves validates via the Euler count") {
  // chi = (2-0-2) + (2-0-2) = 0.
  TssSurface s = examples::torus_parallel(2);
  CHECK(validate(s).valid());
  CHECK(euler_characteristic(s) == 0);
}

TEST_CASE("euler characteristics of the named examples") {
  CHECK(euler_characteristic(examples::sphere_equator()) == 2);
  CHECK(euler_characteristic(examples::torus_parallel(2)) == 0);
  CHECK(euler_characteristic(examples::genus2_separating()) == -2);
}

TEST_CASE("build_graph maps leaves to vertices and curves to oriented edges") {
  LabeledGraph g = build_graph(examples::cyl1());
  REQUIRE(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].tail == "Lneg");
  CHECK(g.edges[0].head == "Lpos");
  CHECK(g.edges[0].period == Rational::parse("44/7"));

  // Two-curve cylinder: path with the middle vertex negative.
  LabeledGraph g2 = build_graph(examples::cyl2());
  REQUIRE(g2.edges.size() == 2);
  for (const auto& e : g2.edges) CHECK(e.tail == "Lmid");
  CHECK(g2.find_vertex("Lmid")->sign == -1);

  // Torus with two parallel curves: double edge, both oriented the same way.
  LabeledGraph g3 = build_graph(examples::torus_parallel(2));
  REQUIRE(g3.edges.size() == 2);
  CHECK(g3.edges[0].tail == g3.edges[1].tail);
  CHECK(g3.edges[0].head == g3.edges[1].head);

  CHECK_THROWS_AS(build_graph(TssSurface{}), InvalidSurfaceError);
}

TEST_CASE("graph is sign-bipartite with all edges from - to +") {
  for (const TssSurface& s :
       {examples::cyl1(), examples::cyl2(), examples::torus_parallel(4),
        examples::cylinder_chain(5), examples::genus2_separating()}) {
    LabeledGraph g = build_graph(s);
    CHECK(g.vertices.size() == s.leaves.size());
    CHECK(g.edges.size() == s.curves.size());
    for (const auto& e : g.edges) {
      CHECK(g.find_vertex(e.tail)->sign == -1);
      CHECK(g.find_vertex(e.head)->sign == +1);
    }
  }
}

TEST_CASE("serialize/parse is the identity on valid surfaces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    // Random chains and rings with random exact labels.
    int n = 2 + static_cast<int>(rng() % 4);
    TssSurface s = (rng() % 2) ? examples::cylinder_chain(n)
                               : examples::torus_parallel(2 * (1 + static_cast<int>(rng() % 2)));
    for (auto& c : s.curves) {
      c.period = Rational(1 + static_cast<long>(rng() % 999), 1 + static_cast<long>(rng() % 97));
    }
    for (auto& l : s.leaves) {
      Rational mag(1 + static_cast<long>(rng() % 999), 1 + static_cast<long>(rng() % 97));
      l.volume = l.sign > 0 ? mag : -mag;
    }
    CHECK(parse_tss(to_json(s).dump()) == s);
  }
}

TEST_CASE("euler characteristic of valid closed surfaces is even and at most 2") {
  for (int n = 2; n <= 8; n += 2) {
    TssSurface s = examples::torus_parallel(n);
    long chi = euler_characteristic(s);
    CHECK(chi % 2 == 0);
    CHECK(chi <= 2);
  }
  CHECK(euler_characteristic(examples::sphere_equator()) % 2 == 0);
  CHECK(euler_characteristic(examples::genus2_separating()) <= 2);
}
