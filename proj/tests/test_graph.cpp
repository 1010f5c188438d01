#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "example_surfaces.hpp"
#include "tss/error.hpp"
#include "tss/graph.hpp"

using namespace tss;

namespace {

TssSurface relabel(const TssSurface& s, const std::string& suffix) {
  TssSurface t = s;
  for (auto& l : t.leaves) l.id += suffix;
  for (auto& c : t.curves) {
    c.id += suffix;
    c.neg_leaf += suffix;
    c.pos_leaf += suffix;
  }
  std::reverse(t.leaves.begin(), t.leaves.end());
  std::reverse(t.curves.begin(), t.curves.end());
  return t;
}

TssSurface mirrored(const TssSurface& s) {
  TssSurface m = s;
  for (auto& l : m.leaves) {
    l.sign = -l.sign;
    l.volume = -l.volume;
  }
  for (auto& c : m.curves) std::swap(c.neg_leaf, c.pos_leaf);
  return m;
}

}  // namespace

TEST_CASE("one-curve cylinder graph has exactly the identity and the flip") {
  LabeledGraph g = build_graph(examples::cyl1());
  auto isos = graph_isomorphisms(g, g, true);
  REQUIRE(isos.size() == 2);
  int reversals = 0;
  for (const auto& m : isos) {
    CHECK(is_isomorphism(g, g, m));
    if (m.global_reversal) {
      ++reversals;
      CHECK(m.vertex_image("Lpos") == "Lneg");
      CHECK(m.vertex_image("Lneg") == "Lpos");
      CHECK(m.edge_image("T") == "T");
    } else {
      CHECK(m.is_identity());
    }
  }
  CHECK(reversals == 1);

  // Without reversals only the identity survives.
  CHECK(graph_isomorphisms(g, g, false).size() == 1);
}

TEST_CASE("different period multisets admit no isomorphism") {
  LabeledGraph g1 = build_graph(examples::cyl1(Rational(1)));
  LabeledGraph g2 = build_graph(examples::cyl1(Rational(2)));
  CHECK(graph_isomorphisms(g1, g2, true).empty());
}

TEST_CASE("two-curve cylinder with equal periods has the end swap") {
  LabeledGraph g = build_graph(examples::cyl2());
  auto isos = graph_isomorphisms(g, g, true);
  REQUIRE(isos.size() == 2);
  for (const auto& m : isos) {
    if (m.is_identity()) continue;
    // The flip diffeomorphism: swaps the ends, reverses orientation.
    CHECK(m.global_reversal);
    CHECK(m.vertex_image("Lmid") == "Lmid");
    CHECK(m.vertex_image("Lleft") == "Lright");
    CHECK(m.edge_image("T1") == "T2");
  }
}

TEST_CASE("automorphism group orders of the named examples") {
  CHECK(automorphism_group(build_graph(examples::cyl1())).order() == 2);

  // Unequal periods kill the end swap.
  TssSurface uneven = examples::cyl2(Rational(1), Rational(2));
  CHECK(automorphism_group(build_graph(uneven)).order() == 1);

  // Torus with two parallel equal-period curves: edge swap, vertex swap with
  // reversal, and their product.
  AutomorphismGroup big = automorphism_group(build_graph(examples::torus_parallel(2)));
  CHECK(big.order() == 4);
  int plain_nonidentity = 0, reversals = 0;
  for (const auto& m : big.elements) {
    if (m.global_reversal) {
      ++reversals;
    } else if (!m.is_identity()) {
      ++plain_nonidentity;
      CHECK(m.edge_image("T0") == "T1");  // pure edge swap
      CHECK(m.vertex_image("L0") == "L0");
    }
  }
  CHECK(plain_nonidentity == 1);
  CHECK(reversals == 2);
}

TEST_CASE("automorphism group is closed and has working generators") {
  LabeledGraph g = build_graph(examples::torus_parallel(2));
  AutomorphismGroup grp = automorphism_group(g);
  for (const auto& a : grp.elements) {
    CHECK(grp.contains(a.inverse()));
    for (const auto& b : grp.elements) CHECK(grp.contains(a.compose(b)));
  }
  // Generators generate the whole group.
  std::set<GraphMap> closure{GraphMap::identity(g)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GraphMap> cur(closure.begin(), closure.end());
    for (const auto& x : cur) {
      for (const auto& gen : grp.generators) {
        if (closure.insert(x.compose(gen)).second) grew = true;
      }
    }
  }
  CHECK(closure.size() == grp.order());
}

TEST_CASE("size guard refuses oversized graphs") {
  TssSurface big = examples::cylinder_chain(13);  // 14 leaves
  CHECK_THROWS_AS(graph_isomorphisms(build_graph(big), build_graph(big), false),
                  SizeGuardError);
  CHECK_THROWS_AS(canonical_key(build_graph(big)), SizeGuardError);
  CHECK_NOTHROW(graph_isomorphisms(build_graph(big), build_graph(big), false, 20));
}

TEST_CASE("morita equivalence examples") {
  TssSurface s = examples::cyl1();
  auto self = morita_equivalent(s, s);
  CHECK(self.equivalent);
  REQUIRE(self.witness);
  CHECK(self.witness->is_identity());

  // Modular periods are Morita invariants.
  CHECK_FALSE(morita_equivalent(examples::cyl1(Rational(1)), examples::cyl1(Rational(2)))
                  .equivalent);

  // Volume is not a Morita invariant.
  TssSurface vol3 = examples::cyl1(Rational(1), Rational(3));
  TssSurface vol5 = examples::cyl1(Rational(1), Rational(5));
  CHECK(morita_equivalent(vol3, vol5).equivalent);
  CHECK_FALSE(isomorphic_tss(vol3, vol5).equivalent);
}

TEST_CASE("morita equivalence ignores orientation-reversing matches") {
  TssSurface s = examples::cyl2();
  TssSurface mirror = mirrored(s);
  REQUIRE(validate(mirror).valid());
  CHECK_FALSE(morita_equivalent(s, mirror).equivalent);
  CHECK(graph_isomorphisms(build_graph(s), build_graph(mirror), false).empty());
  CHECK(graph_isomorphisms(build_graph(s), build_graph(mirror), true).size() == 2);
}

TEST_CASE("isomorphic_tss compares total volumes") {
  TssSurface a = examples::cyl1();
  CHECK(isomorphic_tss(a, a).equivalent);

  TssSurface b = examples::cyl1();
  b.leaves[0].volume = Rational(5);  // totals now 2 vs 0
  CHECK(morita_equivalent(a, b).equivalent);
  CHECK_FALSE(isomorphic_tss(a, b).equivalent);
}

TEST_CASE("equal totals with different per-leaf splits are isomorphic by default") {
  TssSurface a = examples::cyl2();
  TssSurface b = examples::cyl2();
  a.leaves[0].volume = Rational(1);
  a.leaves[2].volume = Rational(4);
  b.leaves[0].volume = Rational(2);
  b.leaves[2].volume = Rational(3);
  REQUIRE(validate(a).valid());
  REQUIRE(validate(b).valid());
  CHECK(isomorphic_tss(a, b).equivalent);
  CHECK_FALSE(isomorphic_tss(a, b, /*strict_volumes=*/true).equivalent);
  // Strict mode accepts matching splits, also across the end swap.
  TssSurface c = examples::cyl2();
  c.leaves[0].volume = Rational(4);
  c.leaves[2].volume = Rational(1);
  CHECK(isomorphic_tss(a, c, /*strict_volumes=*/true).equivalent);
}

TEST_CASE("witnesses are honest isomorphisms") {
  TssSurface s1 = examples::torus_parallel(4);
  TssSurface s2 = relabel(s1, "_b");
  auto d = morita_equivalent(s1, s2);
  REQUIRE(d.equivalent);
  CHECK(is_isomorphism(build_graph(s1), build_graph(s2), *d.witness));
}

TEST_CASE("morita equivalence is an equivalence relation on a finite family") {
  std::vector<TssSurface> family = {
      examples::cyl1(Rational(1)),      relabel(examples::cyl1(Rational(1)), "_x"),
      examples::cyl1(Rational(2)),      examples::cyl2(),
      relabel(examples::cyl2(), "_y"),  examples::torus_parallel(2),
      relabel(examples::torus_parallel(2), "_z")};
  const int n = static_cast<int>(family.size());
  std::vector<std::vector<bool>> eq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) eq[i][j] = morita_equivalent(family[i], family[j]).equivalent;
  }
  for (int i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (int j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (int k = 0; k < n; ++k) {
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
      }
    }
  }
}

TEST_CASE("canonical keys agree exactly on isomorphism classes") {
  LabeledGraph g1 = build_graph(examples::cyl2());
  LabeledGraph g2 = build_graph(relabel(examples::cyl2(), "_r"));
  CHECK(canonical_key(g1) == canonical_key(g2));

  LabeledGraph g3 = build_graph(examples::cyl2(Rational::parse("22/7"), Rational(3)));
  CHECK(canonical_key(g1) != canonical_key(g3));

  // The mirror is not orientation-preserving isomorphic to the original.
  CHECK(canonical_key(g1) != canonical_key(build_graph(mirrored(examples::cyl2()))));
}

TEST_CASE("canonical key equality iff orientation-preserving isomorphism") {
  std::mt19937_64 rng(23);
  std::vector<Rational> periods = {Rational(1), Rational(2), Rational::parse("1/2")};
  std::vector<LabeledGraph> graphs;
  for (int trial = 0; trial < 40; ++trial) {
    TssSurface s;
    if (rng() % 2) {
      s = examples::cylinder_chain(2 + static_cast<int>(rng() % 4));
    } else {
      s = examples::torus_parallel(2 + 2 * static_cast<int>(rng() % 2));
    }
    for (auto& c : s.curves) c.period = periods[rng() % periods.size()];
    if (rng() % 2) s = relabel(s, "_m" + std::to_string(trial));
    graphs.push_back(build_graph(s));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i; j < graphs.size(); ++j) {
      bool same_key = canonical_key(graphs[i]) == canonical_key(graphs[j]);
      bool iso = !graph_isomorphisms(graphs[i], graphs[j], false).empty();
      CHECK(same_key == iso);
    }
  }
}
