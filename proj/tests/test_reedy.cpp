#include "doctest.h"
#include "realcmp/constructions.hpp"
#include "realcmp/reedy.hpp"

using namespace realcmp;

namespace {

// Cells of X_n lying in the image of some external degeneracy.
std::vector<std::size_t> degenerate_counts(const SimplicialObject& x, int n) {
  std::vector<std::size_t> out;
  for (int j = 0; j <= x.internal_cap(); ++j) {
    std::vector<char> hit(x.level(n).size(j), 0);
    for (int i = 0; i < n; ++i)
      for (Cell a = 0; a < x.level(n - 1).size(j); ++a) hit[x.degeneracy(n - 1, i)(j, a)] = 1;
    out.push_back(static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1)));
  }
  return out;
}

std::vector<std::size_t> sizes(const SimplicialSet& s) {
  std::vector<std::size_t> v;
  for (int j = 0; j <= s.cap(); ++j) v.push_back(s.size(j));
  return v;
}

std::vector<SimplicialObject> test_objects() {
  std::vector<SimplicialObject> xs;
  xs.push_back(point_object(4, 2));
  xs.push_back(nerve_object(poset_category(1), 4));
  xs.push_back(nerve_object(or_category(), 3));
  xs.push_back(unravel(nerve_object(poset_category(1), 3), 2).object());
  xs.push_back(fat(nerve_object(poset_category(1), 3)).object());
  return xs;
}

}  // namespace

TEST_CASE("latching objects are the degenerate cells") {
  for (const auto& x : test_objects())
    for (int n = 1; n <= x.cap(); ++n) {
      const auto l = latching(x, n);
      CHECK(sizes(l.value) == degenerate_counts(x, n));
    }
  auto nv = nerve_object(poset_category(1), 3);
  auto l2 = latching(nv, 2);
  CHECK(l2.value.size(0) == 4);
  auto l1 = latching(nv, 1);
  CHECK(sizes(l1.value) == sizes(nv.level(0)));
  for (Cell c = 0; c < nv.level(0).size(0); ++c)
    CHECK(l1.canonical_map(0, l1.cell(0, 0, c)) == nv.degeneracy(0, 0)(0, c));
  auto pt = point_object(3, 2);
  for (int n = 1; n <= 3; ++n) CHECK(sizes(latching(pt, n).value) == std::vector<std::size_t>{1, 1, 1});
  CHECK(latching(pt, 0).value.size(0) == 0);
}

TEST_CASE("latching filtration and its pushout squares") {
  for (const auto& x : test_objects())
    for (int n = 1; n <= std::min(x.cap(), 4); ++n) {
      const auto r = latching_filtration(x, n);
      INFO("n=" << n << " " << r.detail);
      CHECK(r.ok());
      CHECK(static_cast<int>(r.pushouts.size()) == n - 1);
      for (std::size_t k = 1; k < r.stage_sizes.size(); ++k)
        for (std::size_t j = 0; j < r.stage_sizes[k].size(); ++j) CHECK(r.stage_sizes[k - 1][j] <= r.stage_sizes[k][j]);
    }
}

TEST_CASE("Reedy cofibrancy") {
  for (const auto& x : test_objects()) {
    const auto r = reedy_cofibrant_check(x);
    CHECK(r.cofibrant());
    for (const auto& d : r.degrees) CHECK(d.image_is_degenerate_union);
  }
  CHECK_THROWS_AS(latching(point_object(2, 1).restrict_to_faces(), 1), ConfigError);
}

TEST_CASE("skeleta") {
  auto nv = nerve_object(poset_category(1), 3);
  auto sk0 = skeleton(nv, 0);
  sk0.value.validate();
  for (int m = 0; m <= 3; ++m) CHECK(sk0.value.level(m).size(0) == nv.level(0).size(0));
  for (const auto& x : test_objects()) {
    skeleton(x, 1).value.validate();
    const auto r = skeleton_check(x);
    CHECK(r.ok());
  }
  auto pt = point_object(3, 1);
  for (int n = 0; n <= 3; ++n) {
    auto sk = skeleton(pt, n);
    for (int m = 0; m <= 3; ++m) CHECK(sizes(sk.value.level(m)) == std::vector<std::size_t>{1, 1});
  }
}
