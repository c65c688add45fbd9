#include "realcmp/cosimplicial.hpp"

#include <functional>

#include "realcmp/simplicial_object.hpp"

namespace realcmp {

CosimplicialObject::CosimplicialObject(std::vector<SimplicialSet> levels, MapFamily cofaces, MapFamily codegeneracies)
    : levels_(std::move(levels)), cofaces_(std::move(cofaces)), codegeneracies_(std::move(codegeneracies)) {
  if (levels_.empty()) throw ValidationError("CosimplicialObject: no levels");
  const auto count = levels_.size();
  for (const auto& l : levels_)
    if (l.cap() != levels_.front().cap()) throw ValidationError("CosimplicialObject: internal caps differ");
  if (cofaces_.size() != count || codegeneracies_.size() != count - 1)
    throw ValidationError("CosimplicialObject: family lengths do not match the cap");
  for (std::size_t n = 0; n < count; ++n)
    if (cofaces_[n].size() != (n == 0 ? 0 : n + 1)) throw ValidationError("CosimplicialObject: wrong coface count");
  for (std::size_t n = 0; n + 1 < count; ++n)
    if (codegeneracies_[n].size() != n + 1) throw ValidationError("CosimplicialObject: wrong codegeneracy count");
}

Cell CosimplicialObject::coact(const MonotoneMap& u, int j, Cell c) const {
  const auto word = action_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    c = it->degeneracy ? codegeneracy(it->degree, it->index)(j, c) : coface(it->degree, it->index)(j, c);
  return c;
}

namespace {

struct Generator {
  MonotoneMap map;
  const SimplicialMap* action;
};

std::vector<Generator> generators(const CosimplicialObject& x) {
  std::vector<Generator> out;
  for (int n = 1; n <= x.cap(); ++n)
    for (int i = 0; i <= n; ++i) out.push_back({MonotoneMap::coface(n, i), &x.coface(n, i)});
  for (int n = 0; n < x.cap(); ++n)
    for (int j = 0; j <= n; ++j) out.push_back({MonotoneMap::codegeneracy(n, j), &x.codegeneracy(n, j)});
  return out;
}

}  // namespace

void CosimplicialObject::validate() const {
  auto fail = [](const std::string& what) { throw ValidationError("cosimplicial object: " + what); };
  for (const auto& l : levels_) l.validate();
  const auto gens = generators(*this);
  for (const auto& g : gens)
    if (auto v = map_violation(level(g.map.dom()), level(g.map.cod()), *g.action))
      fail("structure map " + g.map.to_string() + " is not simplicial: " + *v);
  // Every length-two word is compared with every other word of the same composite.
  std::map<MonotoneMap, SimplicialMap> seen;
  for (const auto& g1 : gens)
    for (const auto& g2 : gens) {
      if (g1.map.cod() != g2.map.dom()) continue;
      const auto composite = compose(g2.map, g1.map);
      auto action = compose(*g2.action, *g1.action);
      if (composite.is_identity()) {
        if (action != identity_map(level(composite.dom())))
          fail("word " + g2.map.to_string() + " o " + g1.map.to_string() + " is not the identity");
        continue;
      }
      auto [it, fresh] = seen.emplace(composite, std::move(action));
      if (!fresh && it->second != compose(*g2.action, *g1.action))
        fail("cosimplicial identity fails for " + composite.to_string());
    }
}

std::optional<std::string> cosimplicial_map_violation(const CosimplicialObject& source,
                                                      const CosimplicialObject& target, const CosimplicialMap& f) {
  if (source.cap() != target.cap()) return "external caps differ";
  if (f.components.size() != static_cast<std::size_t>(source.cap()) + 1) return "component count mismatch";
  for (int n = 0; n <= source.cap(); ++n)
    if (auto v = map_violation(source.level(n), target.level(n), f.components[static_cast<std::size_t>(n)]))
      return "level " + std::to_string(n) + ": " + *v;
  const auto sg = generators(source), tg = generators(target);
  for (std::size_t g = 0; g < sg.size(); ++g) {
    const auto& m = sg[g].map;
    if (compose(f.components[static_cast<std::size_t>(m.cod())], *sg[g].action) !=
        compose(*tg[g].action, f.components[static_cast<std::size_t>(m.dom())]))
      return "structure map " + m.to_string() + " not preserved";
  }
  return std::nullopt;
}

namespace {

template <class Key>
using CellsFn = std::function<std::vector<Key>(int n, int j)>;
/// Internal action along w : [j'] -> [j].
template <class Key>
using ActFn = std::function<Key(const MonotoneMap& w, const Key&)>;
/// External pushforward along g : [n'] -> [n].
template <class Key>
using PushFn = std::function<Key(const MonotoneMap& g, const Key&)>;

template <class Key>
KeyedCosimplicial<Key> build(int cap, int internal_cap, const CellsFn<Key>& cells, const ActFn<Key>& act,
                             const PushFn<Key>& push) {
  if (cap < 0 || internal_cap < 0) throw ConfigError("cosimplicial: negative cap");
  KeyedCosimplicial<Key> out;
  std::vector<SimplicialSet> levels;
  for (int n = 0; n <= cap; ++n) {
    std::vector<std::vector<Key>> ks;
    for (int j = 0; j <= internal_cap; ++j) ks.push_back(cells(n, j));
    std::vector<std::map<Key, Cell>> idx(ks.size());
    for (std::size_t j = 0; j < ks.size(); ++j)
      for (std::size_t c = 0; c < ks[j].size(); ++c) idx[j].emplace(ks[j][c], static_cast<Cell>(c));
    levels.push_back(tabulate<Key>(
        internal_cap, ks, [&](int m, int i, const Key& k) { return act(MonotoneMap::coface(m, i), k); },
        [&](int m, int i, const Key& k) { return act(MonotoneMap::codegeneracy(m, i), k); }));
    out.keys.push_back(std::move(ks));
    out.index.push_back(std::move(idx));
  }
  auto along = [&](const MonotoneMap& g) {
    SimplicialMap f;
    for (int j = 0; j <= internal_cap; ++j) {
      std::vector<Cell> comp;
      for (const auto& k : out.keys[static_cast<std::size_t>(g.dom())][static_cast<std::size_t>(j)])
        comp.push_back(out.find(g.cod(), j, push(g, k)));
      f.components.push_back(std::move(comp));
    }
    return f;
  };
  CosimplicialObject::MapFamily cofaces(static_cast<std::size_t>(cap) + 1), codegens(static_cast<std::size_t>(cap));
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) cofaces[static_cast<std::size_t>(n)].push_back(along(MonotoneMap::coface(n, i)));
  for (int n = 0; n < cap; ++n)
    for (int j = 0; j <= n; ++j)
      codegens[static_cast<std::size_t>(n)].push_back(along(MonotoneMap::codegeneracy(n, j)));
  out.object = CosimplicialObject(std::move(levels), std::move(cofaces), std::move(codegens));
  return out;
}

template <class From, class To, class F>
CosimplicialMap keyed_map(const KeyedCosimplicial<From>& from, const KeyedCosimplicial<To>& to, F&& image) {
  if (from.object.cap() != to.object.cap() || from.object.internal_cap() != to.object.internal_cap())
    throw ConfigError("cosimplicial map: caps differ");
  CosimplicialMap f;
  for (int n = 0; n <= from.object.cap(); ++n) {
    SimplicialMap m;
    for (int j = 0; j <= from.object.internal_cap(); ++j) {
      std::vector<Cell> comp;
      for (const auto& k : from.keys[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)])
        comp.push_back(to.find(n, j, image(k)));
      m.components.push_back(std::move(comp));
    }
    f.components.push_back(std::move(m));
  }
  return f;
}

std::vector<ChainKey> strict_chains(int k, int bound) {
  std::vector<ChainKey> level;
  for (int r = 0; r <= bound; ++r) level.push_back({r, {}});
  for (int step = 0; step < k; ++step) {
    std::vector<ChainKey> next;
    for (const auto& c : level)
      for (int r = c.top() + 1; r <= bound; ++r)
        for (const auto& a : enumerate_hom(c.top(), r, HomClass::injective)) {
          ChainKey e = c;
          e.maps.push_back(a);
          next.push_back(std::move(e));
        }
    level = std::move(next);
  }
  return level;
}

}  // namespace

StandardCosimplicial standard_cosimplicial(int cap, int internal_cap) {
  return build<MonotoneMap>(
      cap, internal_cap, [](int n, int j) { return enumerate_hom(j, n); },
      [](const MonotoneMap& w, const MonotoneMap& c) { return compose(c, w); },
      [](const MonotoneMap& g, const MonotoneMap& c) { return compose(g, c); });
}

FatCosimplicial fat_cosimplicial(int cap, int internal_cap) {
  return build<FatCell>(
      cap, internal_cap,
      [](int n, int j) {
        std::vector<FatCell> out;
        for (int r = 0; r <= j; ++r)
          for (const auto& v : enumerate_hom(j, r, HomClass::surjective))
            for (const auto& u : enumerate_hom(r, n)) out.push_back({u, v});
        return out;
      },
      [](const MonotoneMap& w, const FatCell& c) {
        const auto em = epi_mono_factorize(compose(c.v, w));
        return FatCell{compose(c.u, em.injection), em.surjection};
      },
      [](const MonotoneMap& g, const FatCell& c) { return FatCell{compose(g, c.u), c.v}; });
}

UnravelCosimplicial unravel_cosimplicial(int cap, int internal_cap, int flag_bound) {
  if (flag_bound < 0) throw ConfigError("unravel: negative flag bound");
  return build<FlaggedCell>(
      cap, internal_cap,
      [flag_bound](int n, int j) {
        std::vector<FlaggedCell> out;
        for (int r = 0; r <= j; ++r) {
          const auto flags = enumerate_flags(flag_bound, r);
          for (const auto& v : enumerate_hom(j, r, HomClass::surjective))
            for (const auto& u : enumerate_hom(r, n))
              for (const auto& fl : flags) out.push_back({u, v, fl});
        }
        return out;
      },
      [](const MonotoneMap& w, const FlaggedCell& c) {
        const auto em = epi_mono_factorize(compose(c.v, w));
        std::vector<int> fl;
        for (int p = 0; p <= em.injection.dom(); ++p) fl.push_back(c.flag[static_cast<std::size_t>(em.injection(p))]);
        return FlaggedCell{compose(c.u, em.injection), em.surjection, std::move(fl)};
      },
      [](const MonotoneMap& g, const FlaggedCell& c) { return FlaggedCell{compose(g, c.u), c.v, c.flag}; });
}

SimpCosimplicial simp_cosimplicial(int cap, int internal_cap, int chain_bound) {
  if (chain_bound < 0) throw ConfigError("simp: negative chain bound");
  return build<ChainCell>(
      cap, internal_cap,
      [chain_bound](int n, int j) {
        std::vector<ChainCell> out;
        for (const auto& ch : enumerate_chains(j, chain_bound))
          for (const auto& u : enumerate_hom(ch.top(), n)) out.push_back({ch, u});
        return out;
      },
      [](const MonotoneMap& w, const ChainCell& c) {
        return ChainCell{c.chain.reindex(w), compose(c.u, c.chain.composite(w(w.dom()), c.chain.length()))};
      },
      [](const MonotoneMap& g, const ChainCell& c) { return ChainCell{c.chain, compose(g, c.u)}; });
}

SubdividedCosimplicial subdivided_cosimplicial(int cap, int internal_cap, int subdivision_bound) {
  if (subdivision_bound < 0) throw ConfigError("subdivision: negative bound");
  std::vector<std::vector<ChainKey>> chains;
  for (int k = 0; k <= internal_cap; ++k) chains.push_back(strict_chains(k, subdivision_bound));
  return build<SubdividedCell>(
      cap, internal_cap,
      [chains](int n, int j) {
        std::vector<SubdividedCell> out;
        for (int k = 0; k <= j; ++k)
          for (const auto& s : enumerate_hom(j, k, HomClass::surjective))
            for (const auto& ch : chains[static_cast<std::size_t>(k)])
              for (const auto& x : enumerate_hom(ch.top(), n)) out.push_back({x, ch, s});
        return out;
      },
      [](const MonotoneMap& w, const SubdividedCell& c) {
        const auto em = epi_mono_factorize(compose(c.s, w));
        const auto& i = em.injection;
        return SubdividedCell{compose(c.x, c.chain.composite(i(i.dom()), c.chain.length())), c.chain.reindex(i),
                              em.surjection};
      },
      [](const MonotoneMap& g, const SubdividedCell& c) { return SubdividedCell{compose(g, c.x), c.chain, c.s}; });
}

CosimplicialMap q_cosimplicial(const FatCosimplicial& from, const StandardCosimplicial& to) {
  return keyed_map(from, to, [](const FatCell& c) { return compose(c.u, c.v); });
}

CosimplicialMap pi_cosimplicial(const UnravelCosimplicial& from, const FatCosimplicial& to) {
  return keyed_map(from, to, [](const FlaggedCell& c) { return FatCell{c.u, c.v}; });
}

CosimplicialMap last_vertex_cosimplicial(const SimpCosimplicial& from, const StandardCosimplicial& to) {
  return keyed_map(from, to, [](const ChainCell& c) { return compose(c.u, c.chain.last_vertex()); });
}

FatCell beta_cell(const SubdividedCell& c) { return FatCell{compose(c.x, c.chain.last_vertex()), c.s}; }

FlaggedCell tau_cell(const SubdividedCell& c) {
  std::vector<int> flag;
  for (int p = 0; p <= c.chain.length(); ++p) flag.push_back(c.chain.stage(p));
  return FlaggedCell{compose(c.x, c.chain.last_vertex()), c.s, std::move(flag)};
}

CosimplicialMap beta_cosimplicial(const SubdividedCosimplicial& from, const FatCosimplicial& to) {
  return keyed_map(from, to, beta_cell);
}

CosimplicialMap tau_cosimplicial(const SubdividedCosimplicial& from, const UnravelCosimplicial& to) {
  for (const auto& c : from.keys.front().front())
    if (!to.index.front().front().contains(tau_cell(c)))
      throw ConfigError("tau: flag bound is smaller than the subdivision bound");
  return keyed_map(from, to, tau_cell);
}

}  // namespace realcmp
