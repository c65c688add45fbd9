#include <map>
#include <random>

#include "doctest.h"
#include "realcmp/sset_ops.hpp"

using namespace realcmp;

namespace {

// Vertex sequence of a cell, read off through the action of vertex inclusions.
std::vector<Cell> vertices(const SimplicialSet& x, int n, Cell c) {
  std::vector<Cell> out;
  for (int v = 0; v <= n; ++v) out.push_back(x.act(MonotoneMap::vertex(n, v), c));
  return out;
}

// Nerve of [n] mapped to the standard simplex by vertex sequences.
SimplicialMap poset_nerve_to_simplex(const SimplicialSet& ner, const SimplicialSet& simplex, int n) {
  SimplicialMap f;
  for (int k = 0; k <= ner.cap(); ++k) {
    HomSet hom(k, n);
    std::vector<Cell> comp;
    for (Cell c = 0; c < ner.size(k); ++c) {
      auto vs = vertices(ner, k, c);
      comp.push_back(static_cast<Cell>(hom.index(MonotoneMap(n, std::vector<int>(vs.begin(), vs.end())))));
    }
    f.components.push_back(std::move(comp));
  }
  (void)simplex;
  return f;
}

}  // namespace

TEST_CASE("standard simplex counts") {
  auto s11 = standard_simplex(1, 1);
  CHECK(s11.size(0) == 2);
  CHECK(s11.size(1) == 3);
  auto s22 = standard_simplex(2, 2);
  CHECK(s22.size(2) == 10);
  auto s0 = standard_simplex(0, 4);
  for (int n = 0; n <= 4; ++n) CHECK(s0.size(n) == 1);
  for (int n = 0; n <= 3; ++n)
    for (int cap = 0; cap <= 4; ++cap) {
      auto s = standard_simplex(n, cap);
      s.validate();
      for (int k = 0; k <= cap; ++k) {
        REQUIRE(s.size(k) == binomial(n + k + 1, k + 1));
        REQUIRE(s.nondegenerate_count(k) == binomial(n + 1, k + 1));
      }
    }
}

TEST_CASE("act agrees with precomposition on the standard simplex") {
  const int n = 3, cap = 4;
  auto s = standard_simplex(n, cap);
  for (int k = 0; k <= cap; ++k) {
    HomSet src(k, n);
    for (int k2 = 0; k2 <= cap; ++k2) {
      HomSet tgt(k2, n);
      for (const auto& u : enumerate_hom(k2, k))
        for (std::size_t c = 0; c < src.size(); ++c)
          REQUIRE(s.act(u, static_cast<Cell>(c)) == tgt.index(compose(src[c], u)));
    }
  }
}

TEST_CASE("nerve of a poset is the standard simplex") {
  for (int n = 0; n <= 3; ++n) {
    auto ner = nerve(poset_category(n), 4);
    auto simplex = standard_simplex(n, 4);
    ner.validate();
    auto f = poset_nerve_to_simplex(ner, simplex, n);
    check_map(ner, simplex, f);
    CHECK(is_bijective(ner, simplex, f));
  }
}

TEST_CASE("nerve of OR and of a discrete category") {
  auto ner = nerve(or_category(), 5);
  ner.validate();
  for (int n = 0; n <= 5; ++n) CHECK(ner.size(n) == (std::size_t{1} << n));
  auto disc = nerve(discrete_category(2), 4);
  disc.validate();
  for (int n = 0; n <= 4; ++n) {
    CHECK(disc.size(n) == 2);
    CHECK(disc.nondegenerate_count(n) == (n == 0 ? 2u : 0u));
  }
  auto iso = nerve(iso_groupoid(), 3);
  iso.validate();
  CHECK(iso.size(1) == 4);
  CHECK(iso.size(2) == 8);
}

TEST_CASE("OR composition table") {
  auto c = or_category();
  CHECK(*c.compose(1, 1) == 1);
  CHECK(*c.compose(0, 0) == 0);
  CHECK(*c.compose(1, 0) == 1);
  CHECK(*c.compose(0, 1) == 1);
}

TEST_CASE("bad categories are rejected") {
  using M = FiniteCategory::Morphism;
  // Composite 1 o 1 missing.
  CHECK_THROWS_AS(FiniteCategory(1, {M{0, 0, "id"}, M{0, 0, "e"}}, {0}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}}),
                  ValidationError);
  // Not associative: a o a = b, b o a = id, a o b = a.
  CHECK_THROWS_AS(FiniteCategory(1, {M{0, 0, "id"}, M{0, 0, "a"}, M{0, 0, "b"}}, {0},
                                 {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {0, 2, 2}, {2, 0, 2},
                                  {1, 1, 2}, {2, 1, 0}, {1, 2, 1}, {2, 2, 2}}),
                  ValidationError);
}

TEST_CASE("unravel and fat categories") {
  auto t = unravel_category(terminal_category(), 1);
  CHECK(t.object_count() == 2);
  CHECK(t.morphism_count() == 3);
  auto u = unravel_category(or_category(), 1);
  // Objects are (*, i); morphisms (f, i <= j) minus (1, i <= i).
  CHECK(u.morphism_count() == 2 + 2);
  int endo = 0;
  for (int f = 0; f < u.morphism_count(); ++f)
    if (u.source(f) == 0 && u.target(f) == 0) ++endo;
  CHECK(endo == 1);
  auto fat = fat_category(terminal_category());
  CHECK(fat.object_count() == 1);
  CHECK(fat.morphism_count() == 2);
  auto orc = or_category();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) CHECK(*fat.compose(a, b) == *orc.compose(a, b));
  auto fat_or = fat_category(orc);
  CHECK(fat_or.morphism_count() == 3);
}

TEST_CASE("flag object") {
  auto s = flag_object(2, 2);
  s.validate();
  CHECK(s.size(0) == 3);
  CHECK(s.size(1) == 3);
  CHECK(s.size(2) == 1);
  CHECK(s.face(2, 0, 0) == 2);  // (1<2) is the last 1-cell
  auto flags = enumerate_flags(2, 1);
  CHECK(flags[2] == std::vector<int>{1, 2});
  auto s0 = flag_object(0, 3);
  CHECK(s0.size(0) == 1);
  CHECK(s0.size(1) == 0);
  for (int nb = 0; nb <= 5; ++nb)
    for (int n = 0; n <= 4; ++n) REQUIRE(flag_object(nb, 4).size(n) == binomial(nb + 1, n + 1));
}

TEST_CASE("subdivided simplex") {
  auto sd1 = sd_simplex(1, 2);
  sd1.validate();
  CHECK(sd1.size(0) == 3);
  CHECK(sd1.size(1) == 2);
  CHECK(sd1.size(2) == 0);
  auto sd0 = sd_simplex(0, 2);
  CHECK(sd0.size(0) == 1);
  CHECK(sd0.size(1) == 0);
  auto sd2 = sd_simplex(2, 3);
  sd2.validate();
  // Barycentric subdivision of the 2-simplex: 7 vertices, 12 edges, 6 triangles.
  CHECK(sd2.size(0) == 7);
  CHECK(sd2.size(1) == 12);
  CHECK(sd2.size(2) == 6);
}

TEST_CASE("products and coproducts") {
  auto y = nerve(or_category(), 3);
  auto p = product(point(3), y);
  p.validate();
  for (int n = 0; n <= 3; ++n) CHECK(p.size(n) == y.size(n));
  auto a = standard_simplex(1, 3);
  auto b = standard_simplex(2, 3);
  auto ab = product(a, b);
  ab.validate();
  for (int n = 0; n <= 3; ++n) CHECK(ab.size(n) == a.size(n) * b.size(n));
  auto sum = coproduct(std::vector<SimplicialSet>{point(3), point(3)});
  sum.value.validate();
  for (int n = 0; n <= 3; ++n) CHECK(sum.value.size(n) == 2);
}

TEST_CASE("quotients") {
  auto simplex = standard_simplex(1, 2);
  auto q = quotient(simplex, {{{0, 0}, {0, 1}}});
  q.value.validate();
  check_map(simplex, q.value, q.projection);
  CHECK(q.value.size(0) == 1);
  CHECK(q.value.size(1) == 2);  // the collapsed vertex and the loop
  CHECK(q.value.nondegenerate_count(1) == 1);
  auto again = quotient(q.value, {{{0, 0}, {0, 0}}});
  CHECK(identical(again.value, q.value));
  auto twice = quotient(simplex, {{{0, 0}, {0, 1}}, {{0, 0}, {0, 1}}});
  CHECK(identical(twice.value, q.value));
  CHECK_THROWS_AS(quotient(simplex, {{{0, 0}, {1, 1}}}), IllFormedRelation);
}

TEST_CASE("quotient closure agrees with a brute-force orbit computation") {
  std::mt19937 rng(7);
  auto x = product(standard_simplex(1, 3), standard_simplex(1, 3));
  for (int trial = 0; trial < 20; ++trial) {
    CellRelation rel;
    for (int r = 0; r < 2; ++r) {
      const int n = static_cast<int>(rng() % 3);
      rel.push_back({{n, static_cast<Cell>(rng() % x.size(n))}, {n, static_cast<Cell>(rng() % x.size(n))}});
    }
    auto q = quotient(x, rel);
    q.value.validate();
    // Fixpoint of: reflexive-symmetric-transitive closure plus closure under all operators.
    std::vector<std::vector<std::vector<char>>> eq(4);
    for (int n = 0; n <= 3; ++n) {
      eq[n].assign(x.size(n), std::vector<char>(x.size(n), 0));
      for (Cell a = 0; a < x.size(n); ++a) eq[n][a][a] = 1;
    }
    for (auto& [a, b] : rel) eq[a.degree][a.cell][b.cell] = eq[a.degree][b.cell][a.cell] = 1;
    bool changed = true;
    while (changed) {
      changed = false;
      auto set = [&](int n, Cell a, Cell b) {
        if (!eq[n][a][b]) eq[n][a][b] = eq[n][b][a] = changed = true;
      };
      for (int n = 0; n <= 3; ++n)
        for (Cell a = 0; a < x.size(n); ++a)
          for (Cell b = 0; b < x.size(n); ++b) {
            if (!eq[n][a][b]) continue;
            for (Cell c = 0; c < x.size(n); ++c)
              if (eq[n][b][c]) set(n, a, c);
            for (int i = 0; n > 0 && i <= n; ++i) set(n - 1, x.face(n, i, a), x.face(n, i, b));
            for (int j = 0; n < 3 && j <= n; ++j) set(n + 1, x.degeneracy(n, j, a), x.degeneracy(n, j, b));
          }
    }
    for (int n = 0; n <= 3; ++n)
      for (Cell a = 0; a < x.size(n); ++a)
        for (Cell b = 0; b < x.size(n); ++b)
          REQUIRE((eq[n][a][b] != 0) == (q.projection(n, a) == q.projection(n, b)));
  }
}

TEST_CASE("colimit of a span is a pushout") {
  // Two intervals glued along a vertex: 3 vertices.
  auto i1 = standard_simplex(1, 2);
  auto pt = point(2);
  SimplicialMap v0, v1;
  for (int n = 0; n <= 2; ++n) {
    v0.components.push_back({static_cast<Cell>(0)});
    v1.components.push_back({static_cast<Cell>(i1.size(n) - 1)});
  }
  auto r = colimit({pt, i1, i1}, {{0, 1, v1}, {0, 2, v0}});
  r.value.validate();
  CHECK(r.value.size(0) == 3);
  CHECK(r.value.nondegenerate_count(1) == 2);
}

TEST_CASE("validation catches broken identities") {
  auto s = standard_simplex(1, 2);
  auto faces = s.faces();
  std::swap(faces[1][0], faces[1][1]);
  SimplicialSet broken(2, s.counts(), faces, s.degeneracies());
  CHECK_THROWS_AS(broken.validate(), ValidationError);
}
