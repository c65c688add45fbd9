#include <algorithm>
#include <random>

#include "doctest.h"
#include "realcmp/builtins.hpp"
#include "realcmp/error.hpp"
#include "realcmp/tau_rho.hpp"

using namespace realcmp;

namespace {

// All compositions of `total` into parts+1 nonnegative parts.
void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = 0; a <= total; ++a) {
    cur.push_back(a);
    compositions(parts - 1, total - a, cur, out);
    cur.pop_back();
  }
}

std::vector<BarycentricPoint> grid(int n, int res) {
  std::vector<std::vector<int>> cs;
  std::vector<int> cur;
  compositions(n, res, cur, cs);
  std::vector<BarycentricPoint> pts;
  for (const auto& c : cs) {
    std::vector<Rational> t;
    for (int a : c) t.emplace_back(a, res);
    pts.emplace_back(std::move(t));
  }
  return pts;
}

// The displayed sum over subsets, enumerated by bitmask.
Rational s_bitmask(const std::vector<Rational>& t, int j) {
  const int n = static_cast<int>(t.size()) - 1;
  Rational sum = 0;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (std::popcount(mask) != j + 1) continue;
    std::optional<Rational> lo, hi;
    for (int i = 0; i <= n; ++i) {
      const auto& v = t[static_cast<std::size_t>(i)];
      if (mask >> i & 1u) lo = lo ? std::min(*lo, v) : v;
      else hi = hi ? std::max(*hi, v) : v;
    }
    const Rational d = *lo - (hi ? *hi : Rational(0));
    if (d > 0) sum += d;
  }
  return sum * (j + 1);
}

ObjectMap to_point(const SimplicialObject& x, const SimplicialObject& pt) {
  ObjectMap f;
  for (int n = 0; n <= x.cap(); ++n) {
    SimplicialMap m;
    for (int j = 0; j <= x.internal_cap(); ++j) m.components.emplace_back(x.level(n).size(j), Cell{0});
    f.components.push_back(std::move(m));
  }
  (void)pt;
  return f;
}

}  // namespace

TEST_CASE("last vertex values of subdivided cells") {
  // Single stage [m] = [m]: u picks the top vertex, flag (m).
  for (int m = 0; m <= 3; ++m) {
    const auto v = tau_bar(SdCell{MonotoneMap::identity(m), {MonotoneMap::identity(m)}});
    CHECK(v.simplex == MonotoneMap(m, {m}));
    CHECK(v.flag == std::vector<int>{m});
  }
  const auto v = tau_bar(SdCell{MonotoneMap::identity(1), {MonotoneMap::coface(1, 1)}});
  CHECK(v.simplex == MonotoneMap(1, {0}));
  CHECK(v.flag == std::vector<int>{0});
  // [0] -> [1] via 0 -> 1, then [1] = [1]: both tops land on 1.
  const auto w = tau_bar(SdCell{MonotoneMap::identity(1), {MonotoneMap(1, {1}), MonotoneMap::identity(1)}});
  CHECK(w.simplex == MonotoneMap(1, {1, 1}));
  CHECK(w.flag == std::vector<int>{0, 1});
}

TEST_CASE("tau on the subdivided simplex descends and commutes with faces") {
  std::mt19937 rng(11);
  for (int n = 0; n <= 2; ++n)
    for (int cap = 0; cap <= 3; ++cap) {
      const auto r = tau_semisimplicial(n, cap, cap);
      CHECK_MESSAGE(r.ok(), r.detail);
      r.domain.validate();
      // Each class has exactly one member whose last arrow is an identity.
      for (int k = 0; k <= cap; ++k) {
        std::size_t normal = 0;
        for (const auto& c : r.raw_cells[static_cast<std::size_t>(k)]) normal += c.chain.back().is_identity();
        CHECK(r.domain.size(k) == normal);
      }
      // Face compatibility of the formula on random raw cells.
      for (int trial = 0; trial < 200 && cap > 0; ++trial) {
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(cap));
        const auto& level = r.raw_cells[static_cast<std::size_t>(k)];
        const auto& c = level[rng() % level.size()];
        const int i = static_cast<int>(rng() % static_cast<unsigned>(k + 1));
        const auto face = r.raw_cells[static_cast<std::size_t>(k - 1)][r.raw.face(k, i, r.raw_cell(k, c))];
        auto expected = tau_bar(c);
        expected.simplex = compose(expected.simplex, MonotoneMap::coface(k, i));
        expected.flag.erase(expected.flag.begin() + i);
        CHECK(tau_bar(face) == expected);
      }
    }
  CHECK_THROWS_AS(tau_semisimplicial(1, 2, 3), ConfigError);
}

TEST_CASE("tau on coends: pi o tau is beta, and naturality") {
  for (const auto* name : {"point", "nerve1", "nerve_or"}) {
    const auto x = builtin_object(name, 3);
    const auto on = tau_on_coends(x, 3);
    CHECK_MESSAGE(on.well_defined, on.detail);
    CHECK(on.pi_tau_is_beta);
    CHECK(on.source_cap == 2);
  }
  const auto n1 = builtin_object("nerve1", 3), pt = builtin_object("point", 3);
  CHECK(tau_naturality(n1, pt, to_point(n1, pt), 3).commutes);
  CHECK(tau_naturality(n1, pt, to_point(n1, pt), 4).commutes);
  CHECK_THROWS_AS(tau_on_coends(pt, 2), ConfigError);
}

TEST_CASE("pi o tau induces the subdivision comparison on homology") {
  for (const auto* name : {"point", "nerve_or", "s2"})
    for (int flag_bound : {3, 4}) {
      const auto v = check_pi_tau(builtin_object(name, 3), flag_bound, 1);
      CHECK_MESSAGE(v.ok(), name, " ", v.detail);
    }
  const auto v = check_pi_tau(builtin_object("s2", 4), 4, 2);
  CHECK(v.ok());
  CHECK(v.beta.target.degrees[2].betti == 1);
  CHECK_THROWS_AS(check_pi_tau(builtin_object("point", 3), 3, 2), ConfigError);
}

TEST_CASE("s_fold values") {
  const Rational half(1, 2);
  CHECK(s_fold(BarycentricPoint({half, half}), 1) == 1);
  CHECK(s_fold(BarycentricPoint({half, half}), 0) == 0);
  for (int n = 0; n <= 3; ++n) {
    std::vector<Rational> e(static_cast<std::size_t>(n) + 1, Rational(0));
    e[0] = 1;
    CHECK(s_fold(BarycentricPoint(e), 0) == 1);
    for (int j = 1; j <= n; ++j) CHECK(s_fold(BarycentricPoint(e), j) == 0);
  }
  CHECK_THROWS_AS(BarycentricPoint({half, Rational(1, 3)}), ConfigError);
  CHECK_THROWS_AS(BarycentricPoint({Rational(3, 2), -half}), ConfigError);
}

TEST_CASE("s_fold against the bitmask sum, symmetry and bounds") {
  std::mt19937 rng(5);
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : grid(n, 6)) {
      Rational total = 0, mx = *std::max_element(p.t.begin(), p.t.end());
      for (int j = 0; j <= n; ++j) {
        const auto s = s_fold(p, j);
        CHECK(s == s_bitmask(p.t, j));
        CHECK(s == s_fold_sorted(p, j));
        CHECK(s >= 0);
        CHECK(s <= mx * (j + 1));
        auto q = p.t;
        std::shuffle(q.begin(), q.end(), rng);
        CHECK(s_fold(BarycentricPoint(q), j) == s);
        total += s;
      }
      CHECK(total == 1);
    }
}

TEST_CASE("rho does not respect faces") {
  for (int n = 1; n <= 3; ++n) {
    const auto w = rho_face_counterexample(n, 6);
    REQUIRE(w.has_value());
    CHECK(w->total > 0);
    CHECK(w->t[static_cast<std::size_t>(w->face)] == 0);
    CHECK(verify_rho_witness(*w));
    auto forged = *w;
    forged.discrepancy.assign(forged.discrepancy.size(), Rational(0));
    CHECK_FALSE(verify_rho_witness(forged));
  }
  // Vertices: s is 0/1 valued and folds every vertex onto vertex 0, so the routes
  // agree exactly when the face keeps vertex 0 in place.
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i <= n; ++i) {
        std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
        e[static_cast<std::size_t>(k)] = 1;
        const BarycentricPoint pre(e);
        for (const auto& s : s_fold_all(pre)) CHECK((s == 0 || s == 1));
        const auto lhs = rho_direct(pre.coface(i)), rhs = rho_through_face(pre, i);
        CHECK((lhs == rhs) == (i > 0));
      }
  // An interior point of a face.
  const Rational half(1, 2);
  const BarycentricPoint pre({half, half});
  CHECK(rho_direct(pre.coface(0)).ambient(2) == std::vector<Rational>{0, 1, 0});
  CHECK(rho_through_face(pre, 0).ambient(2) == std::vector<Rational>{0, 0, 1});
  const auto j = to_json(*rho_face_counterexample(2, 6));
  CHECK(j.at("total").get<std::string>() != "0");
}
