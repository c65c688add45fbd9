#include <algorithm>
#include <set>

#include "doctest.h"
#include "realcmp/monotone.hpp"

using namespace realcmp;

namespace {

// Every function [k] -> [n] by odometer, kept when weakly increasing.
std::vector<std::vector<int>> brute_monotone(int k, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(static_cast<std::size_t>(k) + 1, 0);
  while (true) {
    if (std::is_sorted(v.begin(), v.end())) out.push_back(v);
    int p = k;
    while (p >= 0 && v[static_cast<std::size_t>(p)] == n) v[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) break;
    ++v[static_cast<std::size_t>(p)];
  }
  return out;
}

bool brute_surjective(const std::vector<int>& v, int n) {
  std::set<int> img(v.begin(), v.end());
  return static_cast<int>(img.size()) == n + 1;
}

bool brute_injective(const std::vector<int>& v) {
  return std::set<int>(v.begin(), v.end()).size() == v.size();
}

}  // namespace

TEST_CASE("compose examples") {
  CHECK(compose(MonotoneMap::identity(2), MonotoneMap(2, {0, 2})) == MonotoneMap(2, {0, 2}));
  CHECK(compose(MonotoneMap::codegeneracy(0, 0), MonotoneMap::coface(1, 1)) == MonotoneMap::identity(0));
  CHECK(compose(MonotoneMap(1, {0, 0, 1}), MonotoneMap(2, {1, 2})) == MonotoneMap::identity(1));
  CHECK_THROWS_AS(compose(MonotoneMap::identity(1), MonotoneMap::identity(2)), CompositionMismatch);
}

TEST_CASE("invalid maps are rejected") {
  CHECK_THROWS(MonotoneMap(1, {1, 0}));
  CHECK_THROWS(MonotoneMap(1, {0, 2}));
}

TEST_CASE("epi-mono examples") {
  auto f = epi_mono_factorize(MonotoneMap(2, {0, 0, 2}));
  CHECK(f.surjection == MonotoneMap(1, {0, 0, 1}));
  CHECK(f.injection == MonotoneMap(2, {0, 2}));
  auto g = epi_mono_factorize(MonotoneMap(2, {1, 1}));
  CHECK(g.surjection == MonotoneMap(0, {0, 0}));
  CHECK(g.injection == MonotoneMap(2, {1}));
  auto h = epi_mono_factorize(MonotoneMap::identity(3));
  CHECK(h.surjection.is_identity());
  CHECK(h.injection.is_identity());
}

TEST_CASE("factorization round trip and uniqueness up to degree 6") {
  for (int k = 0; k <= 6; ++k)
    for (int n = 0; n <= 6; ++n)
      for (const auto& u : enumerate_hom(k, n)) {
        auto [s, i] = epi_mono_factorize(u);
        REQUIRE(s.is_surjective());
        REQUIRE(i.is_injective());
        REQUIRE(compose(i, s) == u);
        if (k > 3 || n > 3) continue;
        int hits = 0;
        for (int r = 0; r <= std::min(k, n); ++r)
          for (const auto& s2 : enumerate_hom(k, r, HomClass::surjective))
            for (const auto& i2 : enumerate_hom(r, n, HomClass::injective))
              if (compose(i2, s2) == u) ++hits;
        REQUIRE(hits == 1);
      }
}

TEST_CASE("enumeration matches brute force and the binomial formulas") {
  CHECK(enumerate_hom(1, 1).size() == 3);
  CHECK(enumerate_hom(2, 1, HomClass::surjective) ==
        std::vector<MonotoneMap>{MonotoneMap(1, {0, 0, 1}), MonotoneMap(1, {0, 1, 1})});
  CHECK(enumerate_hom(1, 2, HomClass::injective) ==
        std::vector<MonotoneMap>{MonotoneMap(2, {0, 1}), MonotoneMap(2, {0, 2}), MonotoneMap(2, {1, 2})});
  for (int k = 0; k <= 7; ++k)
    for (int n = 0; n <= 7; ++n) {
      auto brute = brute_monotone(k, n);
      auto all = enumerate_hom(k, n);
      REQUIRE(all.size() == brute.size());
      for (std::size_t p = 0; p < all.size(); ++p)
        REQUIRE(std::vector<int>(all[p].values().begin(), all[p].values().end()) == brute[p]);
      std::size_t surj = 0, inj = 0;
      for (const auto& v : brute) {
        surj += brute_surjective(v, n);
        inj += brute_injective(v);
      }
      REQUIRE(enumerate_hom(k, n, HomClass::surjective).size() == surj);
      REQUIRE(enumerate_hom(k, n, HomClass::injective).size() == inj);
      REQUIRE(hom_count(k, n) == brute.size());
      REQUIRE(hom_count(k, n, HomClass::surjective) == surj);
      REQUIRE(hom_count(k, n, HomClass::injective) == inj);
    }
}

TEST_CASE("cosimplicial identities among generators up to degree 6") {
  using M = MonotoneMap;
  for (int n = 2; n <= 6; ++n) {
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        REQUIRE(compose(M::coface(n, j), M::coface(n - 1, i)) == compose(M::coface(n, i), M::coface(n - 1, j - 1)));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= n; ++i) {
        auto lhs = compose(M::codegeneracy(n - 1, j), M::coface(n, i));
        if (i == j || i == j + 1) REQUIRE(lhs == M::identity(n - 1));
        else if (i < j) REQUIRE(lhs == compose(M::coface(n - 1, i), M::codegeneracy(n - 2, j - 1)));
        else REQUIRE(lhs == compose(M::coface(n - 1, i - 1), M::codegeneracy(n - 2, j)));
      }
    for (int j = 0; j < n; ++j)
      for (int i = 0; i <= j; ++i)
        REQUIRE(compose(M::codegeneracy(n - 1, j), M::codegeneracy(n, i)) ==
                compose(M::codegeneracy(n - 1, i), M::codegeneracy(n, j + 1)));
  }
}

TEST_CASE("hom set indexing") {
  HomSet h(2, 3);
  for (std::size_t p = 0; p < h.size(); ++p) CHECK(h.index(h[p]) == p);
  CHECK_FALSE(h.contains(MonotoneMap::identity(2)));
}

TEST_CASE("latching categories against commuting-triangle brute force") {
  CHECK(latching_category(0).objects().empty());
  auto l1 = latching_category(1);
  REQUIRE(l1.objects().size() == 1);
  CHECK(l1.objects()[0] == MonotoneMap::codegeneracy(0, 0));
  CHECK(l1.arrows().size() == 1);
  for (int n = 1; n <= 4; ++n) {
    auto cat = latching_category(n);
    std::size_t objects = 0;
    for (int m = 0; m < n; ++m) objects += hom_count(n, m, HomClass::surjective);
    REQUIRE(cat.objects().size() == objects);
    std::size_t arrows = 0;
    for (const auto& a : cat.objects())
      for (const auto& b : cat.objects())
        for (const auto& w : enumerate_hom(a.cod(), b.cod()))
          if (compose(w, a) == b) ++arrows;
    REQUIRE(cat.arrows().size() == arrows);
    for (const auto& arr : cat.arrows())
      REQUIRE(compose(arr.map, cat.objects()[arr.source]) == cat.objects()[arr.target]);
  }
  CHECK(latching_category(2).objects().size() == 3);
  CHECK(LatchingIndexCategory::in_filtration_stage(MonotoneMap(2, {0, 0, 1, 2}), 1));
  CHECK(LatchingIndexCategory::factors_through_codegeneracy(MonotoneMap(2, {0, 0, 1, 2}), 0));
  CHECK_FALSE(LatchingIndexCategory::factors_through_codegeneracy(MonotoneMap(2, {0, 0, 1, 2}), 1));
}

TEST_CASE("codes are injective on small hom sets") {
  std::set<std::uint64_t> codes;
  std::size_t total = 0;
  for (int k = 0; k <= 4; ++k)
    for (int n = 0; n <= 4; ++n)
      for (const auto& u : enumerate_hom(k, n)) {
        codes.insert(u.code());
        ++total;
      }
  CHECK(codes.size() == total);
}
