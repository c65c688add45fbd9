#include "realcmp/constructions.hpp"

namespace realcmp {

MonotoneMap ChainKey::composite(int p, int q) const {
  MonotoneMap u = MonotoneMap::identity(stage(p));
  for (int s = p; s < q; ++s) u = compose(maps[static_cast<std::size_t>(s)], u);
  return u;
}

ChainKey ChainKey::reindex(const MonotoneMap& u) const {
  ChainKey out;
  out.r0 = stage(u(0));
  for (int p = 1; p <= u.dom(); ++p) out.maps.push_back(composite(u(p - 1), u(p)));
  return out;
}

MonotoneMap ChainKey::last_vertex() const {
  std::vector<int> v;
  for (int i = 0; i <= length(); ++i) v.push_back(composite(i, length())(stage(i)));
  return MonotoneMap(top(), std::move(v));
}

std::vector<ChainKey> enumerate_chains(int k, int bound) {
  std::vector<ChainKey> level;
  for (int r = 0; r <= bound; ++r) level.push_back({r, {}});
  for (int step = 0; step < k; ++step) {
    std::vector<ChainKey> next;
    for (const auto& c : level)
      for (int r = 0; r <= bound; ++r)
        for (const auto& a : enumerate_hom(c.top(), r)) {
          ChainKey e = c;
          e.maps.push_back(a);
          next.push_back(std::move(e));
        }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

FatObject left_kan_extend(const SimplicialObject& y) {
  std::vector<std::vector<SurjectionKey>> keys;
  for (int n = 0; n <= y.cap(); ++n) {
    std::vector<SurjectionKey> level;
    for (int k = 0; k <= n; ++k)
      for (auto& v : enumerate_hom(n, k, HomClass::surjective)) level.push_back(std::move(v));
    std::sort(level.begin(), level.end());
    keys.push_back(std::move(level));
  }
  return FatObject(
      y, std::move(keys), [](const SurjectionKey& v) { return v.cod(); },
      [](const SurjectionKey& v, const MonotoneMap& u) {
        auto [s, i] = epi_mono_factorize(compose(v, u));
        return FatObject::Route{s, i};
      },
      true);
}

FatObject fat(const SimplicialObject& x) { return left_kan_extend(x.restrict_to_faces()); }

UnravelObject unravel(const SimplicialObject& x, int flag_bound) {
  if (flag_bound < 0) throw ConfigError("unravel: negative flag bound");
  std::vector<std::vector<FlaggedKey>> keys;
  for (int n = 0; n <= x.cap(); ++n) {
    std::vector<FlaggedKey> level;
    for (int k = 0; k <= n; ++k)
      for (const auto& v : enumerate_hom(n, k, HomClass::surjective))
        for (auto& flag : enumerate_flags(flag_bound, k)) level.push_back({v, std::move(flag)});
    std::sort(level.begin(), level.end());
    keys.push_back(std::move(level));
  }
  return UnravelObject(
      x.restrict_to_faces(), std::move(keys), [](const FlaggedKey& a) { return a.surjection.cod(); },
      [](const FlaggedKey& a, const MonotoneMap& u) {
        auto [s, i] = epi_mono_factorize(compose(a.surjection, u));
        std::vector<int> flag;
        for (int p = 0; p <= i.dom(); ++p) flag.push_back(a.flag[static_cast<std::size_t>(i(p))]);
        return UnravelObject::Route{{s, std::move(flag)}, i};
      },
      true);
}

SimpObject simp(const SimplicialObject& x, int chain_bound) {
  if (x.is_semi()) throw ConfigError("simp: needs external degeneracies");
  if (chain_bound < 0 || chain_bound > x.cap()) throw ConfigError("simp: chain bound outside 0..cap");
  std::vector<std::vector<ChainKey>> keys;
  for (int k = 0; k <= x.cap(); ++k) keys.push_back(enumerate_chains(k, chain_bound));
  return SimpObject(
      x, std::move(keys), [](const ChainKey& c) { return c.top(); },
      [](const ChainKey& c, const MonotoneMap& u) {
        return SimpObject::Route{c.reindex(u), c.composite(u(u.dom()), c.length())};
      },
      true);
}

namespace {

template <class Key, class F>
ObjectMap summandwise(const SummandObject<Key>& src, F&& image) {
  ObjectMap out;
  const auto& obj = src.object();
  for (int n = 0; n <= obj.cap(); ++n) {
    SimplicialMap f;
    for (int j = 0; j <= obj.internal_cap(); ++j) {
      std::vector<Cell> comp(obj.level(n).size(j));
      for (Cell c = 0; c < comp.size(); ++c) {
        auto [a, base] = src.locate(n, j, c);
        comp[c] = image(n, a, j, base);
      }
      f.components.push_back(std::move(comp));
    }
    out.components.push_back(std::move(f));
  }
  return out;
}

}  // namespace

ObjectMap proj_q(const FatObject& fx, const SimplicialObject& x) {
  std::vector<std::vector<ActionWord>> words;
  for (int n = 0; n <= fx.cap(); ++n) {
    words.emplace_back();
    for (const auto& v : fx.keys(n)) words.back().push_back(action_word(v));
  }
  return summandwise(fx, [&](int n, std::size_t a, int j, Cell c) {
    return x.apply(words[static_cast<std::size_t>(n)][a], j, c);
  });
}

ObjectMap proj_pi(const UnravelObject& ux, const FatObject& fx) {
  return summandwise(ux, [&](int n, std::size_t a, int j, Cell c) {
    return fx.cell(n, fx.find(n, ux.keys(n)[a].surjection), j, c);
  });
}

ObjectMap last_vertex(const SimpObject& sx, const SimplicialObject& x) {
  std::vector<std::vector<ActionWord>> words;
  for (int n = 0; n <= sx.cap(); ++n) {
    words.emplace_back();
    for (const auto& ch : sx.keys(n)) words.back().push_back(action_word(ch.last_vertex()));
  }
  return summandwise(sx, [&](int n, std::size_t a, int j, Cell c) {
    return x.apply(words[static_cast<std::size_t>(n)][a], j, c);
  });
}

ObjectMap fat_map(const FatObject& fx, const FatObject& fy, const ObjectMap& f) {
  return summandwise(fx, [&](int n, std::size_t a, int j, Cell c) {
    const auto& key = fx.keys(n)[a];
    return fy.cell(n, fy.find(n, key), j, f.components[static_cast<std::size_t>(key.cod())](j, c));
  });
}

ObjectMap unravel_map(const UnravelObject& ux, const UnravelObject& uy, const ObjectMap& f) {
  return summandwise(ux, [&](int n, std::size_t a, int j, Cell c) {
    const auto& key = ux.keys(n)[a];
    return uy.cell(n, uy.find(n, key), j, f.components[static_cast<std::size_t>(key.surjection.cod())](j, c));
  });
}

ObjectMap simp_map(const SimpObject& sx, const SimpObject& sy, const ObjectMap& f) {
  return summandwise(sx, [&](int n, std::size_t a, int j, Cell c) {
    const auto& key = sx.keys(n)[a];
    return sy.cell(n, sy.find(n, key), j, f.components[static_cast<std::size_t>(key.top())](j, c));
  });
}

SimplicialObject nerve_object(const FiniteCategory& c, int cap) { return discrete_object(nerve(c, cap), cap); }

namespace {

// Morphism sequence of a nerve cell (degree >= 1), or {object} in degree 0.
std::vector<int> nerve_chain(const SimplicialSet& ner, int n, Cell c) {
  if (n == 0) return {static_cast<int>(c)};
  std::vector<int> out;
  for (int p = 1; p <= n; ++p) out.push_back(static_cast<int>(ner.act(MonotoneMap(n, {p - 1, p}), c)));
  return out;
}

std::vector<std::map<std::vector<int>, Cell>> nerve_index(const SimplicialSet& ner) {
  std::vector<std::map<std::vector<int>, Cell>> index(static_cast<std::size_t>(ner.cap()) + 1);
  for (int n = 0; n <= ner.cap(); ++n)
    for (Cell c = 0; c < ner.size(n); ++c) index[static_cast<std::size_t>(n)][nerve_chain(ner, n, c)] = c;
  return index;
}

// Build the comparison from the nerve side and check it. `decode` turns a chain of the
// bigger category into (summand key, chain of C).
template <class Key, class Decode>
NerveCompatReport compare_with_nerve(const std::string& kind, const SimplicialSet& big, const FiniteCategory& c,
                                     const SummandObject<Key>& construction, int cap, Decode&& decode) {
  NerveCompatReport r;
  r.kind = kind;
  const auto small = nerve(c, cap);
  const auto small_index = nerve_index(small);
  const auto left = discrete_object(big, cap);
  const auto& right = construction.object();
  ObjectMap f;
  for (int n = 0; n <= cap; ++n) {
    r.left_counts.push_back(left.level(n).size(0));
    r.right_counts.push_back(right.level(n).size(0));
    std::vector<Cell> comp;
    for (Cell x = 0; x < big.size(n); ++x) {
      auto [key, chain] = decode(n, nerve_chain(big, n, x));
      const auto a = construction.find(n, key);
      const auto deg = static_cast<std::size_t>(construction.base_degree(n, a));
      comp.push_back(construction.cell(n, a, 0, small_index[deg].at(chain)));
    }
    SimplicialMap level;
    for (int j = 0; j <= cap; ++j) {
      std::vector<Cell> cj;
      for (Cell x = 0; x < comp.size(); ++x) {
        auto [a, base] = construction.locate(n, 0, comp[x]);
        cj.push_back(construction.cell(n, a, j, base));
      }
      level.components.push_back(std::move(cj));
    }
    f.components.push_back(std::move(level));
  }
  auto violation = object_map_violation(left, right, f);
  r.is_map = !violation.has_value();
  if (violation) r.detail = *violation;
  r.bijective = true;
  for (int n = 0; n <= cap; ++n)
    if (!is_bijective(left.level(n), right.level(n), f.components[static_cast<std::size_t>(n)])) {
      r.bijective = false;
      if (r.detail.empty()) r.detail = "not bijective at level " + std::to_string(n);
    }
  return r;
}

}  // namespace

NerveCompatReport nerve_compat_unravel(const FiniteCategory& c, int flag_bound, int cap) {
  const auto big_cat = unravel_category(c, flag_bound);
  const auto mor = unravel_morphisms(c, flag_bound);
  const auto construction = unravel(nerve_object(c, cap), flag_bound);
  const int levels = flag_bound + 1;
  auto decode = [&](int n, const std::vector<int>& chain) {
    std::vector<int> idx, small;
    int first_object;
    if (n == 0) {
      idx.push_back(chain[0] % levels);
      first_object = chain[0] / levels;
    } else {
      idx.push_back(mor[static_cast<std::size_t>(chain[0])].i);
      first_object = c.source(mor[static_cast<std::size_t>(chain[0])].f);
      for (int m : chain) {
        const auto& e = mor[static_cast<std::size_t>(m)];
        idx.push_back(e.j);
        if (e.i < e.j) small.push_back(e.f);
      }
    }
    std::vector<int> v{0}, flag{idx[0]};
    for (std::size_t p = 1; p < idx.size(); ++p) {
      if (idx[p] != idx[p - 1]) flag.push_back(idx[p]);
      v.push_back(static_cast<int>(flag.size()) - 1);
    }
    if (small.empty()) small.push_back(first_object);
    const int k = static_cast<int>(flag.size()) - 1;
    return std::pair{FlaggedKey{MonotoneMap(k, std::move(v)), std::move(flag)}, std::move(small)};
  };
  return compare_with_nerve("unravel", nerve(big_cat, cap), c, construction, cap, decode);
}

NerveCompatReport nerve_compat_fat(const FiniteCategory& c, int cap) {
  const auto big_cat = fat_category(c);
  const auto mor = fat_morphisms(c);
  const auto construction = fat(nerve_object(c, cap));
  auto decode = [&](int n, const std::vector<int>& chain) {
    if (n == 0) return std::pair{MonotoneMap::identity(0), chain};
    std::vector<int> v{0}, small;
    for (int m : chain) {
      const auto& e = mor[static_cast<std::size_t>(m)];
      v.push_back(v.back() + e.a);
      if (e.a == 1) small.push_back(e.f);
    }
    if (small.empty()) small.push_back(c.source(mor[static_cast<std::size_t>(chain[0])].f));
    const int k = v.back();
    return std::pair{MonotoneMap(k, std::move(v)), std::move(small)};
  };
  return compare_with_nerve("fat", nerve(big_cat, cap), c, construction, cap, decode);
}

}  // namespace realcmp
