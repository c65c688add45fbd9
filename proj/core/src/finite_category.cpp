#include "realcmp/finite_category.hpp"

#include <map>
#include <tuple>

#include "realcmp/error.hpp"

namespace realcmp {

FiniteCategory::FiniteCategory(int object_count, std::vector<Morphism> morphisms, std::vector<int> identities,
                               const std::vector<Composite>& composition,
                               std::vector<std::string> object_labels)
    : object_count_(object_count),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      object_labels_(std::move(object_labels)) {
  const int m = morphism_count();
  if (object_count_ < 0) throw ValidationError("category: negative object count");
  if (static_cast<int>(identities_.size()) != object_count_)
    throw ValidationError("category: need exactly one identity per object");
  for (const auto& f : morphisms_)
    if (f.source < 0 || f.source >= object_count_ || f.target < 0 || f.target >= object_count_)
      throw ValidationError("category: morphism endpoint out of range");
  if (object_labels_.empty())
    for (int x = 0; x < object_count_; ++x) object_labels_.push_back(std::to_string(x));
  if (static_cast<int>(object_labels_.size()) != object_count_)
    throw ValidationError("category: object label count mismatch");
  table_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  for (const auto& t : composition) {
    if (t.first < 0 || t.first >= m || t.second < 0 || t.second >= m || t.result < 0 || t.result >= m)
      throw ValidationError("category: composition triple references unknown morphism");
    auto& slot = table_[static_cast<std::size_t>(t.second) * static_cast<std::size_t>(m) +
                        static_cast<std::size_t>(t.first)];
    if (slot >= 0 && slot != t.result) throw ValidationError("category: conflicting composition triples");
    slot = t.result;
  }
  validate();
}

std::optional<int> FiniteCategory::compose(int g, int f) const {
  const int r = table_[static_cast<std::size_t>(g) * morphisms_.size() + static_cast<std::size_t>(f)];
  if (r < 0) return std::nullopt;
  return r;
}

int FiniteCategory::compose_checked(int g, int f) const {
  auto r = compose(g, f);
  if (!r) throw CompositionMismatch("category: morphisms " + std::to_string(g) + " o " + std::to_string(f));
  return *r;
}

std::vector<FiniteCategory::Composite> FiniteCategory::composition_triples() const {
  std::vector<Composite> out;
  for (int g = 0; g < morphism_count(); ++g)
    for (int f = 0; f < morphism_count(); ++f)
      if (auto r = compose(g, f)) out.push_back({g, f, *r});
  return out;
}

void FiniteCategory::validate() const {
  const int m = morphism_count();
  for (int x = 0; x < object_count_; ++x) {
    const int id = identity(x);
    if (id < 0 || id >= m || source(id) != x || target(id) != x)
      throw ValidationError("category: identity of object " + std::to_string(x) + " is not an endomorphism");
  }
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f) {
      const bool composable = target(f) == source(g);
      auto r = compose(g, f);
      if (composable != r.has_value())
        throw ValidationError("category: composition table wrong domain at (" + std::to_string(g) + "," +
                              std::to_string(f) + ")");
      if (r && (source(*r) != source(f) || target(*r) != target(g)))
        throw ValidationError("category: composite has wrong endpoints");
    }
  for (int f = 0; f < m; ++f)
    if (*compose(identity(target(f)), f) != f || *compose(f, identity(source(f))) != f)
      throw ValidationError("category: unit law fails for morphism " + std::to_string(f));
  for (int h = 0; h < m; ++h)
    for (int g = 0; g < m; ++g) {
      if (target(g) != source(h)) continue;
      const int hg = *compose(h, g);
      for (int f = 0; f < m; ++f) {
        if (target(f) != source(g)) continue;
        if (*compose(hg, f) != *compose(h, *compose(g, f)))
          throw ValidationError("category: associativity fails");
      }
    }
}

FiniteCategory terminal_category() { return FiniteCategory(1, {{0, 0, "id"}}, {0}, {{0, 0, 0}}, {"*"}); }

FiniteCategory poset_category(int n) {
  std::vector<FiniteCategory::Morphism> mor;
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      index[{i, j}] = static_cast<int>(mor.size());
      mor.push_back({i, j, std::to_string(i) + "<=" + std::to_string(j)});
    }
  std::vector<int> ids;
  for (int i = 0; i <= n; ++i) ids.push_back(index[{i, i}]);
  std::vector<FiniteCategory::Composite> comp;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      for (int k = j; k <= n; ++k) comp.push_back({index[{j, k}], index[{i, j}], index[{i, k}]});
  return FiniteCategory(n + 1, std::move(mor), std::move(ids), comp);
}

FiniteCategory or_category() {
  std::vector<FiniteCategory::Composite> comp;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b) comp.push_back({a, b, a | b});
  return FiniteCategory(1, {{0, 0, "0"}, {0, 0, "1"}}, {0}, comp, {"*"});
}

FiniteCategory discrete_category(int objects) {
  std::vector<FiniteCategory::Morphism> mor;
  std::vector<int> ids;
  std::vector<FiniteCategory::Composite> comp;
  for (int x = 0; x < objects; ++x) {
    ids.push_back(x);
    mor.push_back({x, x, "id" + std::to_string(x)});
    comp.push_back({x, x, x});
  }
  return FiniteCategory(objects, std::move(mor), std::move(ids), comp);
}

FiniteCategory iso_groupoid() {
  // 0 = id_a, 1 = id_b, 2 = f : a -> b, 3 = g : b -> a.
  std::vector<FiniteCategory::Morphism> mor = {{0, 0, "id_a"}, {1, 1, "id_b"}, {0, 1, "f"}, {1, 0, "g"}};
  std::vector<FiniteCategory::Composite> comp = {
      {0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}, {3, 1, 3}, {0, 3, 3}, {3, 2, 0}, {2, 3, 1}};
  return FiniteCategory(2, std::move(mor), {0, 1}, comp, {"a", "b"});
}

std::vector<UnravelMorphism> unravel_morphisms(const FiniteCategory& c, int flag_bound) {
  if (flag_bound < 0) throw ConfigError("unravel_category: negative flag bound");
  std::vector<UnravelMorphism> out;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int i = 0; i <= flag_bound; ++i)
      for (int j = i; j <= flag_bound; ++j)
        if (i != j || c.is_identity(f)) out.push_back({f, i, j});
  return out;
}

FiniteCategory unravel_category(const FiniteCategory& c, int flag_bound) {
  const int levels = flag_bound + 1;
  auto obj = [&](int x, int i) { return x * levels + i; };
  const auto list = unravel_morphisms(c, flag_bound);
  std::vector<FiniteCategory::Morphism> mor;
  std::map<std::tuple<int, int, int>, int> index;
  for (const auto& [f, i, j] : list) {
    index[{f, i, j}] = static_cast<int>(mor.size());
    mor.push_back({obj(c.source(f), i), obj(c.target(f), j),
                   "(" + c.morphism(f).label + "," + std::to_string(i) + "<=" + std::to_string(j) + ")"});
  }
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int x = 0; x < c.object_count(); ++x)
    for (int i = 0; i < levels; ++i) {
      ids.push_back(index.at({c.identity(x), i, i}));
      labels.push_back("(" + c.object_label(x) + "," + std::to_string(i) + ")");
    }
  std::vector<FiniteCategory::Composite> comp;
  for (std::size_t gi = 0; gi < list.size(); ++gi)
    for (std::size_t fi = 0; fi < list.size(); ++fi) {
      const auto& g = list[gi];
      const auto& f = list[fi];
      if (f.j != g.i) continue;
      auto gf = c.compose(g.f, f.f);
      if (!gf) continue;
      comp.push_back({static_cast<int>(gi), static_cast<int>(fi), index.at({*gf, f.i, g.j})});
    }
  return FiniteCategory(c.object_count() * levels, std::move(mor), std::move(ids), comp, std::move(labels));
}

std::vector<FatMorphism> fat_morphisms(const FiniteCategory& c) {
  std::vector<FatMorphism> out;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int a = 0; a <= 1; ++a)
      if (a == 1 || c.is_identity(f)) out.push_back({f, a});
  return out;
}

FiniteCategory fat_category(const FiniteCategory& c) {
  const auto list = fat_morphisms(c);
  std::vector<FiniteCategory::Morphism> mor;
  std::map<std::pair<int, int>, int> index;
  for (const auto& [f, a] : list) {
    index[{f, a}] = static_cast<int>(mor.size());
    mor.push_back({c.source(f), c.target(f), "(" + c.morphism(f).label + "," + std::to_string(a) + ")"});
  }
  std::vector<int> ids;
  for (int x = 0; x < c.object_count(); ++x) ids.push_back(index.at({c.identity(x), 0}));
  std::vector<FiniteCategory::Composite> comp;
  for (std::size_t gi = 0; gi < list.size(); ++gi)
    for (std::size_t fi = 0; fi < list.size(); ++fi) {
      auto gf = c.compose(list[gi].f, list[fi].f);
      if (!gf) continue;
      comp.push_back({static_cast<int>(gi), static_cast<int>(fi), index.at({*gf, list[gi].a | list[fi].a})});
    }
  std::vector<std::string> labels;
  for (int x = 0; x < c.object_count(); ++x) labels.push_back(c.object_label(x));
  return FiniteCategory(c.object_count(), std::move(mor), std::move(ids), comp, std::move(labels));
}

}  // namespace realcmp
