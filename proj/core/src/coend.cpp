#include "realcmp/coend.hpp"

namespace realcmp {

CoendResult coend(const SimplicialObject& x, const CosimplicialObject& c, IndexShape shape) {
  if (x.cap() != c.cap() || x.internal_cap() != c.internal_cap())
    throw ConfigError("coend: caps of the simplicial and cosimplicial sides differ");
  if (shape == IndexShape::delta && x.is_semi())
    throw ConfigError("coend over Delta needs external degeneracies");
  const int cap = x.cap(), ic = x.internal_cap();
  std::vector<SimplicialSet> parts;
  CoendResult r;
  for (int n = 0; n <= cap; ++n) {
    parts.push_back(product(x.level(n), c.level(n)));
    std::vector<std::size_t> ls, rs;
    for (int j = 0; j <= ic; ++j) {
      ls.push_back(x.level(n).size(j));
      rs.push_back(c.level(n).size(j));
    }
    r.left_sizes.push_back(std::move(ls));
    r.right_sizes.push_back(std::move(rs));
  }
  auto sum = coproduct(parts);
  r.offsets.assign(static_cast<std::size_t>(cap) + 1, {});
  for (int n = 0; n <= cap; ++n) r.offsets[static_cast<std::size_t>(n)] = sum.offsets[static_cast<std::size_t>(n)];
  auto raw = [&](int n, int j, Cell a, Cell b) {
    return CellRef{j, sum.cell(static_cast<std::size_t>(n), j, product_cell(c.level(n), j, a, b))};
  };
  CellRelation rel;
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= ic; ++j)
        for (Cell a = 0; a < x.level(n).size(j); ++a)
          for (Cell b = 0; b < c.level(n - 1).size(j); ++b)
            rel.emplace_back(raw(n - 1, j, x.face(n, i)(j, a), b), raw(n, j, a, c.coface(n, i)(j, b)));
  if (shape == IndexShape::delta)
    for (int n = 0; n < cap; ++n)
      for (int k = 0; k <= n; ++k)
        for (int j = 0; j <= ic; ++j)
          for (Cell a = 0; a < x.level(n).size(j); ++a)
            for (Cell b = 0; b < c.level(n + 1).size(j); ++b)
              rel.emplace_back(raw(n + 1, j, x.degeneracy(n, k)(j, a), b), raw(n, j, a, c.codegeneracy(n, k)(j, b)));
  auto q = quotient(sum.value, rel);
  r.value = std::move(q.value);
  r.projection = std::move(q.projection);
  return r;
}

InducedMap induced_map(const CoendResult& source, const CoendResult& target, const CoendCellFn& image) {
  InducedMap m;
  m.well_defined = true;
  const int ic = source.value.cap();
  constexpr Cell unset = static_cast<Cell>(-1);
  for (int j = 0; j <= ic; ++j) {
    std::vector<Cell> comp(source.value.size(j), unset);
    for (int n = 0; n <= source.cap(); ++n) {
      const auto un = static_cast<std::size_t>(n), uj = static_cast<std::size_t>(j);
      for (Cell a = 0; a < source.left_sizes[un][uj]; ++a)
        for (Cell b = 0; b < source.right_sizes[un][uj]; ++b) {
          const Cell cls = source.cell(n, j, a, b);
          const auto [tn, ta, tb] = image(n, j, a, b);
          const Cell img = target.cell(tn, j, ta, tb);
          if (comp[cls] == unset) {
            comp[cls] = img;
          } else if (comp[cls] != img && m.well_defined) {
            m.well_defined = false;
            m.detail = "related representatives disagree in degree " + std::to_string(j);
          }
        }
    }
    m.map.components.push_back(std::move(comp));
  }
  if (!m.well_defined) return m;
  const auto low = target.value.cap() > ic ? target.value.truncated(ic) : target.value;
  if (auto v = map_violation(source.value, low, m.map)) {
    m.detail = *v;
    return m;
  }
  m.simplicial = true;
  return m;
}

InducedMap coend_map(const CoendResult& source, const CoendResult& target, const ObjectMap& f,
                     const CosimplicialMap& g) {
  return induced_map(source, target, [&](int n, int j, Cell a, Cell b) {
    const auto un = static_cast<std::size_t>(n);
    return std::tuple{n, f.components[un](j, a), g.components[un](j, b)};
  });
}

IsoReport make_iso_report(std::string name, const SimplicialSet& source, const SimplicialSet& target,
                          const InducedMap& m) {
  IsoReport r;
  r.name = std::move(name);
  for (int n = 0; n <= source.cap(); ++n) r.source_counts.push_back(source.size(n));
  for (int n = 0; n <= target.cap(); ++n) r.target_counts.push_back(target.size(n));
  r.well_defined = m.well_defined;
  r.simplicial = m.simplicial;
  r.detail = m.detail;
  if (r.simplicial) {
    r.bijective = is_bijective(source, target, m.map);
    if (!r.bijective) r.detail = "not bijective";
  }
  return r;
}

IsoReport diagonal_coend_check(const SimplicialObject& x) {
  const auto d = diagonal(x);
  const auto std_c = standard_cosimplicial(x.cap(), x.internal_cap());
  const auto e = coend(x, std_c.object, IndexShape::delta);
  InducedMap m;
  m.well_defined = true;
  for (int n = 0; n <= d.cap(); ++n) {
    const Cell id = std_c.find(n, n, MonotoneMap::identity(n));
    std::vector<Cell> comp;
    for (Cell a = 0; a < d.size(n); ++a) comp.push_back(e.cell(n, n, a, id));
    m.map.components.push_back(std::move(comp));
  }
  if (auto v = map_violation(d, e.value, m.map)) m.detail = *v;
  else m.simplicial = true;
  return make_iso_report("diagonal", d, e.value, m);
}

IsoReport kan_coend_check(const SimplicialObject& semi) {
  const auto x = semi.restrict_to_faces();
  const auto std_c = standard_cosimplicial(x.cap(), x.internal_cap());
  const auto lke = left_kan_extend(x);
  const auto src = coend(x, std_c.object, IndexShape::delta_plus);
  const auto tgt = coend(lke.object(), std_c.object, IndexShape::delta);
  const auto m = induced_map(src, tgt, [&](int n, int j, Cell a, Cell b) {
    return std::tuple{n, lke.cell(n, lke.find(n, MonotoneMap::identity(n)), j, a), b};
  });
  return make_iso_report("kan", src.value, tgt.value, m);
}

namespace {

template <class Key, class Right, class F>
AssocMap assoc(const SimplicialObject& x, const SummandObject<Key>& sx, const KeyedCosimplicial<Right>& cx,
               F&& image) {
  const auto std_c = standard_cosimplicial(x.cap(), x.internal_cap());
  AssocMap r;
  r.construction = coend(sx.object(), std_c.object, IndexShape::delta);
  r.matrix = coend(x, cx.object, IndexShape::delta);
  r.map = induced_map(r.construction, r.matrix, [&](int n, int j, Cell a, Cell b) {
    const auto [summand, inner] = sx.locate(n, j, a);
    const auto& key = sx.keys(n)[summand];
    const auto& c = std_c.key(n, j, b);
    const int deg = sx.base_degree(n, summand);
    return std::tuple{deg, inner, cx.find(deg, j, image(key, c))};
  });
  return r;
}

FatCell fat_image(const MonotoneMap& v, const MonotoneMap& c) {
  const auto em = epi_mono_factorize(compose(v, c));
  return FatCell{em.injection, em.surjection};
}

FlaggedCell unravel_image(const FlaggedKey& k, const MonotoneMap& c) {
  const auto em = epi_mono_factorize(compose(k.surjection, c));
  std::vector<int> fl;
  for (int p = 0; p <= em.injection.dom(); ++p) fl.push_back(k.flag[static_cast<std::size_t>(em.injection(p))]);
  return FlaggedCell{em.injection, em.surjection, std::move(fl)};
}

IsoReport report(const std::string& name, const AssocMap& a) {
  return make_iso_report(name, a.construction.value, a.matrix.value, a.map);
}

}  // namespace

AssocMap fat_assoc_map(const SimplicialObject& x, const FatCosimplicial& matrix) {
  return assoc(x, fat(x), matrix, fat_image);
}

AssocMap unravel_assoc_map(const SimplicialObject& x, const UnravelCosimplicial& matrix, int flag_bound) {
  return assoc(x, unravel(x, flag_bound), matrix, unravel_image);
}

SimplicialMap inverse_map(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f) {
  if (!is_bijective(source, target, f)) throw ValidationError("inverse_map: map is not bijective");
  SimplicialMap g;
  for (int n = 0; n <= source.cap(); ++n) {
    std::vector<Cell> comp(target.size(n));
    for (Cell c = 0; c < source.size(n); ++c) comp[f(n, c)] = c;
    g.components.push_back(std::move(comp));
  }
  return g;
}

IsoReport assoc_check(const SimplicialObject& x, const std::string& kind, int bound) {
  const int cap = x.cap(), ic = x.internal_cap();
  if (kind == "fat") return report("fat", fat_assoc_map(x, fat_cosimplicial(cap, ic)));
  if (kind == "unravel") return report("unravel", unravel_assoc_map(x, unravel_cosimplicial(cap, ic, bound), bound));
  if (kind == "simp") {
    return report("simp", assoc(x, simp(x, bound), simp_cosimplicial(cap, ic, bound),
                                [](const ChainKey& k, const MonotoneMap& c) {
                                  return ChainCell{k.reindex(c), k.composite(c(c.dom()), k.length())};
                                }));
  }
  throw ConfigError("assoc_check: unknown construction '" + kind + "'");
}

}  // namespace realcmp
