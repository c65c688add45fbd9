#include "doctest.h"
#include "realcmp/builtins.hpp"
#include "realcmp/error.hpp"
#include "realcmp/homology.hpp"
#include "realcmp/json_io.hpp"
#include "realcmp/sset_ops.hpp"

using namespace realcmp;
using nlohmann::json;

namespace {

std::string pointer_of(const json& j) {
  try {
    simplicial_set_from_json(j);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "";
}

}  // namespace

TEST_CASE("built-in objects") {
  for (const auto& name : builtin_names()) {
    const auto x = builtin_set(name, 3);
    x.validate();
    builtin_object(name, 3).validate();
  }
  const auto nor = builtin_set("nerve_or", 4);
  for (int n = 0; n <= 4; ++n) CHECK(nor.size(n) == (std::size_t{1} << n));
  CHECK(builtin_set("simplex2", 2).size(2) == 10);
  const auto s2 = homology(builtin_set("s2", 3));
  CHECK(s2.degrees[2].betti == 1);
  CHECK(s2.degrees[1].betti == 0);
  CHECK(homology(builtin_set("circle", 3)).degrees[1].betti == 1);
  CHECK(homology(builtin_set("nerve_iso", 4)) == homology(point(4)));
  CHECK_THROWS_AS(builtin_set("torus", 2), ConfigError);
}

TEST_CASE("simplicial sets round-trip through JSON") {
  for (const auto& name : builtin_names()) {
    const auto x = builtin_set(name, 3);
    const auto y = simplicial_set_from_json(json::parse(to_json(x).dump()));
    CHECK(identical(x, y));
  }
  const auto f = flag_object(3, 2);
  CHECK(identical(f, simplicial_set_from_json(to_json(f))));
}

TEST_CASE("finite categories round-trip through JSON") {
  for (const auto& c : {terminal_category(), or_category(), poset_category(2), iso_groupoid()}) {
    const auto d = finite_category_from_json(to_json(c));
    CHECK(d.object_count() == c.object_count());
    CHECK(d.morphism_count() == c.morphism_count());
    CHECK(identical(nerve(c, 3), nerve(d, 3)));
  }
}

TEST_CASE("schema errors carry a JSON pointer") {
  auto good = to_json(builtin_set("simplex1", 2));
  CHECK(pointer_of(good).empty());
  auto j = good;
  j.erase("counts");
  CHECK(pointer_of(j) == "/counts");
  j = good;
  j["faces"][1][0][2] = 7;
  CHECK(pointer_of(j) == "/faces/1/0/2");
  j = good;
  j["degeneracies"][0] = json::array();
  CHECK(pointer_of(j) == "/degeneracies/0");
  j = good;
  j["cap"] = "two";
  CHECK(pointer_of(j) == "/cap");
  CHECK(pointer_of(json::array()) == "/");
  // Well-formed but not simplicial.
  j = good;
  j["faces"][1][0] = j["faces"][1][1];
  CHECK_THROWS_AS(simplicial_set_from_json(j), ValidationError);
  auto c = to_json(or_category());
  c["composition"][0][2] = 9;
  try {
    finite_category_from_json(c);
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(e.pointer() == "/composition/0/2");
  }
}
