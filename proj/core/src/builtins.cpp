#include "realcmp/builtins.hpp"

#include <algorithm>

#include "realcmp/error.hpp"
#include "realcmp/finite_category.hpp"
#include "realcmp/sset_ops.hpp"

namespace realcmp {

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"point",  "simplex0", "simplex1", "simplex2", "simplex3", "s2",
                                                 "circle", "nerve1",   "nerve_or", "nerve_iso"};
  return names;
}

SimplicialSet sphere2(int cap) {
  const auto s = standard_simplex(2, cap);
  CellRelation rel;
  for (int n = 0; n <= cap; ++n) {
    const Cell base = s.act(MonotoneMap(0, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)), 0);
    for (Cell c = 0; c < s.size(n); ++c) {
      std::vector<int> hit;
      for (int p = 0; p <= n; ++p) hit.push_back(static_cast<int>(s.act(MonotoneMap(n, {p}), c)));
      std::sort(hit.begin(), hit.end());
      if (std::unique(hit.begin(), hit.end()) - hit.begin() < 3) rel.push_back({{n, c}, {n, base}});
    }
  }
  return quotient(s, rel).value;
}

SimplicialSet circle(int cap) { return quotient(standard_simplex(1, cap), {{{0, 0}, {0, 1}}}).value; }

SimplicialSet builtin_set(const std::string& name, int cap) {
  if (name == "point") return point(cap);
  if (name.size() == 8 && name.starts_with("simplex") && name[7] >= '0' && name[7] <= '3')
    return standard_simplex(name[7] - '0', cap);
  if (name == "s2") return sphere2(cap);
  if (name == "circle") return circle(cap);
  if (name == "nerve1") return nerve(poset_category(1), cap);
  if (name == "nerve_or") return nerve(or_category(), cap);
  if (name == "nerve_iso") return nerve(iso_groupoid(), cap);
  throw ConfigError("unknown built-in object '" + name + "'");
}

SimplicialObject builtin_object(const std::string& name, int cap) {
  return discrete_object(builtin_set(name, cap), cap);
}

}  // namespace realcmp
