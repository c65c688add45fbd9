#include "doctest.h"
#include "realcmp/constructions.hpp"

using namespace realcmp;

namespace {

std::size_t brute_chain_count(int k, int bound) {
  // Paths of length k in the complete graph on {0..bound} weighted by hom-set sizes.
  std::vector<std::size_t> ways(static_cast<std::size_t>(bound) + 1, 1);
  for (int step = 0; step < k; ++step) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (int a = 0; a <= bound; ++a)
      for (int b = 0; b <= bound; ++b)
        next[static_cast<std::size_t>(b)] += ways[static_cast<std::size_t>(a)] * enumerate_hom(a, b).size();
    ways = next;
  }
  std::size_t total = 0;
  for (auto w : ways) total += w;
  return total;
}

SimplicialObject nerve1(int cap) { return nerve_object(poset_category(1), cap); }

}  // namespace

TEST_CASE("left Kan extension of the point") {
  auto pt = point_object(4, 2).restrict_to_faces();
  auto l = left_kan_extend(pt);
  l.object().validate();
  for (int n = 0; n <= 4; ++n) {
    CHECK(l.keys(n).size() == (std::size_t{1} << n));
    CHECK(l.object().level(n).size(0) == (std::size_t{1} << n));
  }
  // s_0 of the identity summand of level 1 is the sigma_0 summand of level 2.
  const auto id1 = l.find(1, MonotoneMap::identity(1));
  const Cell img = l.object().degeneracy(1, 0)(0, l.cell(1, id1, 0, 0));
  CHECK(l.locate(2, 0, img).first == l.find(2, MonotoneMap::codegeneracy(1, 0)));
  CHECK(l.object().level(0).size(0) == 1);
}

TEST_CASE("fat construction and q") {
  auto x = nerve1(3);
  auto fx = fat(x);
  fx.object().validate();
  CHECK(fx.object().level(0).size(0) == x.level(0).size(0));
  auto q = proj_q(fx, x);
  CHECK_FALSE(object_map_violation(fx.object(), x, q).has_value());
  // Identity summand maps identically.
  for (int n = 0; n <= 3; ++n) {
    const auto a = fx.find(n, MonotoneMap::identity(n));
    for (Cell c = 0; c < x.level(n).size(0); ++c) CHECK(q.components[static_cast<std::size_t>(n)](0, fx.cell(n, a, 0, c)) == c);
  }
  // Level 1, summand [1] ->> [0], vertex x goes to s_0 x.
  const auto a = fx.find(1, MonotoneMap::to_point(1));
  for (Cell v = 0; v < 2; ++v) CHECK(q.components[1](0, fx.cell(1, a, 0, v)) == x.degeneracy(0, 0)(0, v));
  auto fp = fat(point_object(3, 3));
  auto qp = proj_q(fp, point_object(3, 3));
  for (int n = 0; n <= 3; ++n)
    for (Cell c = 0; c < fp.object().level(n).size(1); ++c) CHECK(qp.components[static_cast<std::size_t>(n)](1, c) == 0);
}

TEST_CASE("unravel construction and pi") {
  auto pt = point_object(3, 2);
  auto u = unravel(pt, 1);
  u.object().validate();
  CHECK(u.keys(0).size() == 2);
  CHECK(u.keys(1).size() == 3);
  for (int N = 0; N <= 4; ++N) {
    auto un = unravel(pt, N);
    for (int n = 0; n <= 3; ++n) {
      std::size_t expect = 0;
      for (int k = 0; k <= n; ++k) expect += binomial(n, k) * binomial(N + 1, k + 1);
      REQUIRE(un.keys(n).size() == expect);
    }
  }
  auto fp = fat(pt);
  auto pi = proj_pi(u, fp);
  CHECK_FALSE(object_map_violation(u.object(), fp.object(), pi).has_value());
  // Fibres over the level-1 summands have sizes 2 and 1.
  std::vector<int> fibre(2, 0);
  for (Cell c = 0; c < 3; ++c) ++fibre[fp.locate(1, 0, pi.components[1](0, c)).first];
  std::sort(fibre.begin(), fibre.end());
  CHECK(fibre == std::vector<int>{1, 2});
  auto x = nerve1(3);
  auto ux = unravel(x, 3);
  ux.object().validate();
  CHECK(ux.object().level(0).size(0) == x.level(0).size(0) * 4);
}

TEST_CASE("simp construction and the last vertex map") {
  auto pt = point_object(1, 1);
  auto s = simp(pt, 1);
  s.object().validate();
  CHECK(s.keys(0).size() == 2);
  CHECK(s.keys(1).size() == 7);
  for (int k = 0; k <= 3; ++k)
    for (int b = 0; b <= 2; ++b) REQUIRE(enumerate_chains(k, b).size() == brute_chain_count(k, b));
  auto x = nerve1(3);
  auto sx = simp(x, 2);
  sx.object().validate();
  auto l = last_vertex(sx, x);
  CHECK_FALSE(object_map_violation(sx.object(), x, l).has_value());
  // k = 0: the chain [r] acts by the top vertex.
  ChainKey c{1, {}};
  CHECK(c.last_vertex() == MonotoneMap::vertex(1, 1));
  ChainKey id2{2, {MonotoneMap::identity(2), MonotoneMap::identity(2)}};
  CHECK(id2.last_vertex() == MonotoneMap(2, {2, 2, 2}));
  ChainKey inc{0, {MonotoneMap(1, {0}), MonotoneMap(2, {0, 2})}};
  CHECK(inc.last_vertex() == MonotoneMap(2, {0, 2, 2}));
}

TEST_CASE("chain reindexing is functorial") {
  auto chains = enumerate_chains(3, 2);
  for (std::size_t p = 0; p < chains.size(); p += 37)
    for (const auto& u : enumerate_hom(2, 3))
      for (const auto& w : enumerate_hom(1, 2))
        REQUIRE(chains[p].reindex(u).reindex(w) == chains[p].reindex(compose(u, w)));
}

TEST_CASE("naturality of q, pi and the last vertex map") {
  const int cap = 3;
  auto x = nerve1(cap);
  auto y = point_object(cap, cap);
  ObjectMap f;
  for (int n = 0; n <= cap; ++n) {
    SimplicialMap m;
    for (int j = 0; j <= cap; ++j) m.components.emplace_back(x.level(n).size(j), 0);
    f.components.push_back(std::move(m));
  }
  REQUIRE_FALSE(object_map_violation(x, y, f).has_value());
  auto fx = fat(x), fy = fat(y);
  auto ff = fat_map(fx, fy, f);
  CHECK_FALSE(object_map_violation(fx.object(), fy.object(), ff).has_value());
  CHECK(compose(proj_q(fy, y), ff).components == compose(f, proj_q(fx, x)).components);
  auto ux = unravel(x, 3), uy = unravel(y, 3);
  auto uf = unravel_map(ux, uy, f);
  CHECK_FALSE(object_map_violation(ux.object(), uy.object(), uf).has_value());
  CHECK(compose(proj_pi(uy, fy), uf).components == compose(ff, proj_pi(ux, fx)).components);
  auto sx = simp(x, 2), sy = simp(y, 2);
  auto sf = simp_map(sx, sy, f);
  CHECK_FALSE(object_map_violation(sx.object(), sy.object(), sf).has_value());
  CHECK(compose(last_vertex(sy, y), sf).components == compose(f, last_vertex(sx, x)).components);
}

TEST_CASE("nerve compatibility isomorphisms") {
  for (const auto& c : {terminal_category(), poset_category(1), or_category()})
    for (int cap = 0; cap <= 3; ++cap) {
      auto fr = nerve_compat_fat(c, cap);
      INFO(fr.detail);
      REQUIRE(fr.ok());
      for (int N = 0; N <= 3; ++N) {
        auto ur = nerve_compat_unravel(c, N, cap);
        INFO(ur.detail);
        REQUIRE(ur.ok());
      }
    }
}
