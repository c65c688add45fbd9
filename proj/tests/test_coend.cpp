#include "doctest.h"
#include "realcmp/coend.hpp"
#include "realcmp/union_find.hpp"

using namespace realcmp;

namespace {

// Class counts of the coend from the full relation over every monotone map u.
std::vector<std::size_t> brute_coend_counts(const SimplicialObject& x, const CosimplicialObject& c, bool injective_only) {
  std::vector<std::size_t> out;
  const int cap = x.cap();
  for (int j = 0; j <= x.internal_cap(); ++j) {
    std::vector<std::size_t> base(static_cast<std::size_t>(cap) + 2, 0);
    for (int n = 0; n <= cap; ++n)
      base[static_cast<std::size_t>(n) + 1] = base[static_cast<std::size_t>(n)] + x.level(n).size(j) * c.level(n).size(j);
    auto id = [&](int n, Cell a, Cell b) { return base[static_cast<std::size_t>(n)] + a * c.level(n).size(j) + b; };
    UnionFind uf(base.back());
    for (int m = 0; m <= cap; ++m)
      for (int n = 0; n <= cap; ++n)
        for (const auto& u : enumerate_hom(m, n, injective_only ? HomClass::injective : HomClass::all))
          for (Cell a = 0; a < x.level(n).size(j); ++a)
            for (Cell b = 0; b < c.level(m).size(j); ++b) uf.unite(id(m, x.act(u, j, a), b), id(n, a, c.coact(u, j, b)));
    std::size_t k = 0;
    uf.canonical_labels(&k);
    out.push_back(k);
  }
  return out;
}

std::vector<std::size_t> counts(const SimplicialSet& s) {
  std::vector<std::size_t> v;
  for (int n = 0; n <= s.cap(); ++n) v.push_back(s.size(n));
  return v;
}

SimplicialObject nerve1(int cap) { return nerve_object(poset_category(1), cap); }

}  // namespace

TEST_CASE("cosimplicial objects satisfy the identities") {
  standard_cosimplicial(3, 3).object.validate();
  fat_cosimplicial(3, 3).object.validate();
  unravel_cosimplicial(3, 3, 3).object.validate();
  simp_cosimplicial(3, 2, 2).object.validate();
  subdivided_cosimplicial(3, 3, 3).object.validate();
  auto s = standard_cosimplicial(3, 3);
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= 3; ++j) CHECK(s.object.level(n).size(j) == standard_simplex(n, 3).size(j));
  // coact along a composite agrees with coact in stages.
  for (const auto& g : enumerate_hom(1, 2))
    for (const auto& h : enumerate_hom(2, 3))
      for (Cell c = 0; c < s.object.level(1).size(2); ++c)
        REQUIRE(s.object.coact(compose(h, g), 2, c) == s.object.coact(h, 2, s.object.coact(g, 2, c)));
}

TEST_CASE("fat simplex counts") {
  auto f = fat_cosimplicial(3, 3);
  for (int n = 0; n <= 3; ++n)
    for (int j = 0; j <= 3; ++j) {
      // Pairs of maps [j] -> [r] -> [n] with the first onto, counted by odometer.
      std::size_t expect = 0;
      for (int r = 0; r <= j; ++r) {
        std::size_t onto = 0, any = 0;
        for (const auto& v : enumerate_hom(j, r))
          if (v.is_surjective()) ++onto;
        any = enumerate_hom(r, n).size();
        expect += onto * any;
      }
      CHECK(f.object.level(n).size(j) == expect);
    }
}

TEST_CASE("comparison maps of cosimplicial objects") {
  const int cap = 3;
  auto s = standard_cosimplicial(cap, cap);
  auto f = fat_cosimplicial(cap, cap);
  auto u = unravel_cosimplicial(cap, cap, 3);
  auto sp = simp_cosimplicial(cap, 2, 2);
  auto s2 = standard_cosimplicial(cap, 2);
  auto t = subdivided_cosimplicial(cap, cap, 3);
  auto q = q_cosimplicial(f, s);
  auto pi = pi_cosimplicial(u, f);
  auto lv = last_vertex_cosimplicial(sp, s2);
  auto beta = beta_cosimplicial(t, f);
  auto tau = tau_cosimplicial(t, u);
  CHECK_FALSE(cosimplicial_map_violation(f.object, s.object, q).has_value());
  CHECK_FALSE(cosimplicial_map_violation(u.object, f.object, pi).has_value());
  CHECK_FALSE(cosimplicial_map_violation(sp.object, s2.object, lv).has_value());
  CHECK_FALSE(cosimplicial_map_violation(t.object, f.object, beta).has_value());
  CHECK_FALSE(cosimplicial_map_violation(t.object, u.object, tau).has_value());
  for (int n = 0; n <= cap; ++n)
    CHECK(compose(pi.components[static_cast<std::size_t>(n)], tau.components[static_cast<std::size_t>(n)]) ==
          beta.components[static_cast<std::size_t>(n)]);
}

TEST_CASE("coend against a brute-force relation") {
  auto x = nerve1(2);
  auto s = standard_cosimplicial(2, 2);
  CHECK(counts(coend(x, s.object, IndexShape::delta).value) == brute_coend_counts(x, s.object, false));
  auto f = fat_cosimplicial(2, 2);
  CHECK(counts(coend(x, f.object, IndexShape::delta).value) == brute_coend_counts(x, f.object, false));
  auto semi = x.restrict_to_faces();
  CHECK(counts(coend(semi, s.object, IndexShape::delta_plus).value) == brute_coend_counts(semi, s.object, true));
  auto t = subdivided_cosimplicial(2, 2, 2);
  CHECK(counts(coend(x, t.object, IndexShape::delta).value) == brute_coend_counts(x, t.object, false));
}

TEST_CASE("the coend of a discrete object recovers the simplicial set") {
  auto y = nerve(or_category(), 3);
  auto e = coend(discrete_object(y, 3), standard_cosimplicial(3, 3).object, IndexShape::delta);
  CHECK(counts(e.value) == counts(y));
  CHECK(identical(diagonal(discrete_object(y, 3)), y));
}

TEST_CASE("diagonal, Kan and associativity isomorphisms") {
  for (int cap = 0; cap <= 3; ++cap) {
    auto x = nerve1(cap);
    auto d = diagonal_coend_check(x);
    INFO(d.detail);
    CHECK(d.ok());
    auto k = kan_coend_check(x);
    INFO(k.detail);
    CHECK(k.ok());
    for (const char* kind : {"fat", "unravel"}) {
      auto a = assoc_check(x, kind, cap + 1);
      INFO(kind << " " << a.detail);
      CHECK(a.ok());
    }
    auto sm = assoc_check(x, "simp", std::min(cap, 2));
    INFO(sm.detail);
    CHECK(sm.ok());
  }
  auto p = point_object(3, 3);
  CHECK(assoc_check(p, "fat", 0).ok());
  CHECK_THROWS_AS(assoc_check(p, "bogus", 0), ConfigError);
}

TEST_CASE("tau needs flags covering the subdivision") {
  auto t = subdivided_cosimplicial(2, 2, 3);
  auto u = unravel_cosimplicial(2, 2, 2);
  CHECK_THROWS_AS(tau_cosimplicial(t, u), ConfigError);
}
