#include "realcmp/reedy.hpp"

#include <algorithm>

namespace realcmp {

namespace {

constexpr Cell kUnset = static_cast<Cell>(-1);

/// Fills comp[cls] = img, reporting whether an earlier assignment disagreed.
bool assign(std::vector<Cell>& comp, Cell cls, Cell img) {
  if (comp[cls] == kUnset) {
    comp[cls] = img;
    return true;
  }
  return comp[cls] == img;
}

/// w with w o from == to, if one exists.
std::optional<MonotoneMap> connecting_map(const MonotoneMap& from, const MonotoneMap& to) {
  std::vector<int> w(static_cast<std::size_t>(from.cod()) + 1, -1);
  for (int i = 0; i <= from.dom(); ++i) {
    auto& slot = w[static_cast<std::size_t>(from(i))];
    if (slot < 0) slot = to(i);
    else if (slot != to(i)) return std::nullopt;
  }
  if (!std::is_sorted(w.begin(), w.end())) return std::nullopt;
  return MonotoneMap(to.cod(), std::move(w));
}

}  // namespace

std::size_t SurjectionColimit::position(const MonotoneMap& v) const {
  auto it = std::find(objects.begin(), objects.end(), v);
  if (it == objects.end()) throw ValidationError("surjection colimit: " + v.to_string() + " is not an object");
  return static_cast<std::size_t>(it - objects.begin());
}

SurjectionColimit surjection_colimit(const SimplicialObject& x, int n, std::vector<MonotoneMap> objects) {
  if (x.is_semi()) throw ConfigError("latching objects need external degeneracies");
  if (n < 0 || n > x.cap()) throw ConfigError("surjection colimit: degree out of range");
  const int ic = x.internal_cap();
  SurjectionColimit r;
  r.degree = n;
  r.objects = std::move(objects);
  for (const auto& v : r.objects)
    if (v.dom() != n || !v.is_surjective()) throw ConfigError("surjection colimit: object is not a surjection out of [n]");
  std::vector<const SimplicialSet*> parts;
  for (const auto& v : r.objects) parts.push_back(&x.level(v.cod()));
  auto sum = parts.empty() ? CoproductResult{constant_set(0, ic), {}} : coproduct(parts);
  r.offsets = sum.offsets;
  CellRelation rel;
  for (std::size_t s = 0; s < r.objects.size(); ++s)
    for (std::size_t t = 0; t < r.objects.size(); ++t) {
      if (s == t) continue;
      auto w = connecting_map(r.objects[s], r.objects[t]);
      if (!w) continue;
      const auto word = action_word(*w);
      for (int j = 0; j <= ic; ++j)
        for (Cell c = 0; c < x.level(w->cod()).size(j); ++c)
          rel.push_back({{j, sum.cell(t, j, c)}, {j, sum.cell(s, j, x.apply(word, j, c))}});
    }
  auto q = quotient(sum.value, rel);
  r.value = std::move(q.value);
  r.projection = std::move(q.projection);
  for (int j = 0; j <= ic; ++j) {
    std::vector<Cell> comp(r.value.size(j), kUnset);
    for (std::size_t p = 0; p < r.objects.size(); ++p) {
      const auto word = action_word(r.objects[p]);
      for (Cell c = 0; c < parts[p]->size(j); ++c)
        if (!assign(comp, r.cell(p, j, c), x.apply(word, j, c)))
          throw ValidationError("surjection colimit: canonical map is not well defined");
    }
    r.canonical_map.components.push_back(std::move(comp));
  }
  return r;
}

LatchingObject latching(const SimplicialObject& x, int n) {
  return surjection_colimit(x, n, latching_category(n).objects());
}

LatchingObject latching_stage(const SimplicialObject& x, int n, int k) {
  if (k < 1 || k > n) throw ConfigError("latching stage: need 1 <= k <= n");
  const auto cat = latching_category(n);
  std::vector<MonotoneMap> objs;
  for (auto i : cat.select([k](const MonotoneMap& phi) { return LatchingIndexCategory::in_filtration_stage(phi, k); }))
    objs.push_back(cat.objects()[i]);
  return surjection_colimit(x, n, std::move(objs));
}

namespace {

/// Summandwise map between colimits: object p of `from` goes to object target_object(p) of `to`.
SimplicialMap summand_map(const SurjectionColimit& from, const SurjectionColimit& to, const SimplicialObject& x,
                          const std::function<std::size_t(std::size_t)>& target_object, bool* ok) {
  SimplicialMap f;
  *ok = true;
  for (int j = 0; j <= x.internal_cap(); ++j) {
    std::vector<Cell> comp(from.value.size(j), kUnset);
    for (std::size_t p = 0; p < from.objects.size(); ++p) {
      const auto tp = target_object(p);
      for (Cell c = 0; c < x.level(from.objects[p].cod()).size(j); ++c)
        *ok = assign(comp, from.cell(p, j, c), to.cell(tp, j, c)) && *ok;
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

std::vector<std::size_t> sizes(const SimplicialSet& s) {
  std::vector<std::size_t> v;
  for (int j = 0; j <= s.cap(); ++j) v.push_back(s.size(j));
  return v;
}

bool is_iso(const SimplicialSet& a, const SimplicialSet& b, const SimplicialMap& f) {
  return !map_violation(a, b, f) && is_bijective(a, b, f);
}

}  // namespace

bool FiltrationReport::ok() const {
  return first_is_previous_level && last_is_latching &&
         std::all_of(inclusions_mono.begin(), inclusions_mono.end(), [](char c) { return c != 0; }) &&
         std::all_of(pushouts.begin(), pushouts.end(), [](char c) { return c != 0; });
}

FiltrationReport latching_filtration(const SimplicialObject& x, int n) {
  if (n < 1 || n > x.cap()) throw ConfigError("latching filtration: need 1 <= n <= cap");
  FiltrationReport r;
  r.degree = n;
  std::vector<LatchingObject> stages;
  for (int k = 1; k <= n; ++k) {
    stages.push_back(latching_stage(x, n, k));
    r.stage_sizes.push_back(sizes(stages.back().value));
  }
  bool ok = false;
  // X_{n-1} as the s_0-summand of L_{n,1}.
  {
    const auto& l1 = stages.front();
    const auto pos = l1.position(MonotoneMap::codegeneracy(n - 1, 0));
    SimplicialMap f;
    for (int j = 0; j <= x.internal_cap(); ++j) {
      std::vector<Cell> comp;
      for (Cell c = 0; c < x.level(n - 1).size(j); ++c) comp.push_back(l1.cell(pos, j, c));
      f.components.push_back(std::move(comp));
    }
    r.first_is_previous_level = is_iso(x.level(n - 1), l1.value, f);
  }
  {
    const auto full = latching(x, n);
    const auto& last = stages.back();
    auto f = summand_map(last, full, x, [&](std::size_t p) { return full.position(last.objects[p]); }, &ok);
    r.last_is_latching = ok && is_iso(last.value, full.value, f);
  }
  std::vector<SimplicialMap> inclusions;
  for (int k = 1; k < n; ++k) {
    const auto& a = stages[static_cast<std::size_t>(k) - 1];
    const auto& b = stages[static_cast<std::size_t>(k)];
    inclusions.push_back(summand_map(a, b, x, [&](std::size_t p) { return b.position(a.objects[p]); }, &ok));
    r.inclusions_mono.push_back(ok && !map_violation(a.value, b.value, inclusions.back()) &&
                                is_injective(a.value, b.value, inclusions.back()));
  }
  // Square at k: L_{n-1,k} -> X_{n-1}, L_{n-1,k} -> L_{n,k}, pushout compared with L_{n,k+1}.
  for (int k = 1; k < n; ++k) {
    const auto lower = latching_stage(x, n - 1, k);
    const auto& lnk = stages[static_cast<std::size_t>(k) - 1];
    const auto& next = stages[static_cast<std::size_t>(k)];
    const auto sk = MonotoneMap::codegeneracy(n - 1, k);
    auto down = summand_map(lower, lnk, x, [&](std::size_t p) { return lnk.position(compose(lower.objects[p], sk)); },
                            &ok);
    bool square_ok = ok;
    auto po = colimit({lower.value, x.level(n - 1), lnk.value},
                      {{0, 1, lower.canonical_map}, {0, 2, down}});
    const auto pos = next.position(sk);
    SimplicialMap cmp;
    for (int j = 0; j <= x.internal_cap(); ++j) {
      std::vector<Cell> comp(po.value.size(j), kUnset);
      for (Cell c = 0; c < x.level(n - 1).size(j); ++c)
        square_ok = assign(comp, po.injections[1](j, c), next.cell(pos, j, c)) && square_ok;
      for (Cell c = 0; c < lnk.value.size(j); ++c)
        square_ok = assign(comp, po.injections[2](j, c), inclusions[static_cast<std::size_t>(k) - 1](j, c)) && square_ok;
      square_ok = square_ok && std::find(comp.begin(), comp.end(), kUnset) == comp.end();
      cmp.components.push_back(std::move(comp));
    }
    square_ok = square_ok && is_iso(po.value, next.value, cmp);
    if (!square_ok && r.detail.empty()) r.detail = "pushout square fails at k=" + std::to_string(k);
    r.pushouts.push_back(square_ok);
  }
  return r;
}

bool CofibrancyReport::cofibrant() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const LatchingCheck& c) { return c.injective; });
}

CofibrancyReport reedy_cofibrant_check(const SimplicialObject& x) {
  CofibrancyReport r;
  for (int n = 1; n <= x.cap(); ++n) {
    const auto l = latching(x, n);
    LatchingCheck c;
    c.degree = n;
    c.sizes = sizes(l.value);
    c.injective = is_injective(l.value, x.level(n), l.canonical_map);
    const auto image = image_mask(x.level(n), l.canonical_map);
    bool same = true;
    for (int j = 0; j <= x.internal_cap(); ++j) {
      std::vector<char> degenerate(x.level(n).size(j), 0);
      for (int i = 0; i < n; ++i)
        for (Cell a = 0; a < x.level(n - 1).size(j); ++a) degenerate[x.degeneracy(n - 1, i)(j, a)] = 1;
      same = same && degenerate == image[static_cast<std::size_t>(j)];
    }
    c.image_is_degenerate_union = same;
    r.degrees.push_back(std::move(c));
  }
  return r;
}

Skeleton skeleton(const SimplicialObject& x, int n) {
  if (n < 0 || n > x.cap()) throw ConfigError("skeleton: need 0 <= n <= cap");
  Skeleton sk;
  const int cap = x.cap(), ic = x.internal_cap();
  for (int m = 0; m <= cap; ++m) {
    std::vector<MonotoneMap> objs;
    for (int k = 0; k <= std::min(n, m); ++k)
      for (auto& v : enumerate_hom(m, k, HomClass::surjective)) objs.push_back(std::move(v));
    sk.levels.push_back(surjection_colimit(x, m, std::move(objs)));
  }
  auto structure = [&](const MonotoneMap& u) {
    const auto& from = sk.levels[static_cast<std::size_t>(u.cod())];
    const auto& to = sk.levels[static_cast<std::size_t>(u.dom())];
    SimplicialMap f;
    for (int j = 0; j <= ic; ++j) {
      std::vector<Cell> comp(from.value.size(j), kUnset);
      for (std::size_t p = 0; p < from.objects.size(); ++p) {
        const auto em = epi_mono_factorize(compose(from.objects[p], u));
        const auto tp = to.position(em.surjection);
        const auto word = action_word(em.injection);
        for (Cell c = 0; c < x.level(from.objects[p].cod()).size(j); ++c)
          if (!assign(comp, from.cell(p, j, c), to.cell(tp, j, x.apply(word, j, c))))
            throw ValidationError("skeleton: structure map is not well defined");
      }
      f.components.push_back(std::move(comp));
    }
    return f;
  };
  std::vector<SimplicialSet> levels;
  for (const auto& l : sk.levels) levels.push_back(l.value);
  SimplicialObject::MapFamily faces(static_cast<std::size_t>(cap) + 1), degens(static_cast<std::size_t>(cap));
  for (int m = 1; m <= cap; ++m)
    for (int i = 0; i <= m; ++i) faces[static_cast<std::size_t>(m)].push_back(structure(MonotoneMap::coface(m, i)));
  for (int m = 0; m < cap; ++m)
    for (int j = 0; j <= m; ++j) degens[static_cast<std::size_t>(m)].push_back(structure(MonotoneMap::codegeneracy(m, j)));
  sk.value = SimplicialObject(std::move(levels), std::move(faces), std::move(degens));
  for (const auto& l : sk.levels) sk.to_x.components.push_back(l.canonical_map);
  return sk;
}

ObjectMap skeleton_inclusion(const SimplicialObject& x, const Skeleton& lower, const Skeleton& upper) {
  ObjectMap f;
  for (std::size_t m = 0; m < lower.levels.size(); ++m) {
    const auto& a = lower.levels[m];
    const auto& b = upper.levels[m];
    bool ok = true;
    f.components.push_back(summand_map(a, b, x, [&](std::size_t p) { return b.position(a.objects[p]); }, &ok));
    if (!ok) throw ValidationError("skeleton inclusion is not well defined");
  }
  return f;
}

bool SkeletonReport::ok() const {
  auto all = [](const std::vector<char>& v) { return std::all_of(v.begin(), v.end(), [](char c) { return c != 0; }); };
  return all(inclusions_mono) && all(maps_to_x_mono) && top_is_iso;
}

SkeletonReport skeleton_check(const SimplicialObject& x) {
  SkeletonReport r;
  std::vector<Skeleton> sks;
  for (int n = 0; n <= x.cap(); ++n) sks.push_back(skeleton(x, n));
  auto mono = [](const SimplicialObject& a, const SimplicialObject& b, const ObjectMap& f) {
    if (object_map_violation(a, b, f)) return false;
    for (int m = 0; m <= a.cap(); ++m)
      if (!is_injective(a.level(m), b.level(m), f.components[static_cast<std::size_t>(m)])) return false;
    return true;
  };
  for (int n = 0; n <= x.cap(); ++n) {
    const auto& sk = sks[static_cast<std::size_t>(n)];
    r.maps_to_x_mono.push_back(mono(sk.value, x, sk.to_x));
    if (n > 0) {
      const auto& lo = sks[static_cast<std::size_t>(n) - 1];
      r.inclusions_mono.push_back(mono(lo.value, sk.value, skeleton_inclusion(x, lo, sk)));
    }
  }
  const auto& top = sks.back();
  r.top_is_iso = r.maps_to_x_mono.back() != 0;
  for (int m = 0; m <= x.cap() && r.top_is_iso; ++m)
    r.top_is_iso = is_bijective(top.value.level(m), x.level(m), top.to_x.components[static_cast<std::size_t>(m)]);
  return r;
}

}  // namespace realcmp
