#include "realcmp/sset_ops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "realcmp/union_find.hpp"

namespace realcmp {

SimplicialSet standard_simplex(int n, int cap) {
  std::vector<std::vector<MonotoneMap>> cells;
  for (int k = 0; k <= cap; ++k) cells.push_back(enumerate_hom(k, n));
  return tabulate<MonotoneMap>(
      cap, cells,
      [](int k, int i, const MonotoneMap& c) { return compose(c, MonotoneMap::coface(k, i)); },
      [](int k, int j, const MonotoneMap& c) { return compose(c, MonotoneMap::codegeneracy(k, j)); },
      [](const MonotoneMap& c) { return c.to_string(); });
}

SimplicialSet point(int cap) { return constant_set(1, cap); }

SimplicialSet constant_set(std::size_t count, int cap) {
  const auto levels = static_cast<std::size_t>(cap) + 1;
  std::vector<Cell> id(count);
  std::iota(id.begin(), id.end(), Cell{0});
  SimplicialSet::ActionTable faces(levels), degens(static_cast<std::size_t>(cap));
  for (std::size_t n = 1; n < levels; ++n) faces[n].assign(n + 1, id);
  for (std::size_t n = 0; n + 1 < levels; ++n) degens[n].assign(n + 1, id);
  return SimplicialSet(cap, std::vector<std::size_t>(levels, count), std::move(faces), std::move(degens));
}

SimplicialSet nerve(const FiniteCategory& c, int cap) {
  // Degree 0 keys are {object}; degree n >= 1 keys are morphism sequences f_1..f_n.
  using Key = std::vector<int>;
  std::vector<std::vector<Key>> cells(static_cast<std::size_t>(cap) + 1);
  for (int x = 0; x < c.object_count(); ++x) cells[0].push_back({x});
  if (cap >= 1)
    for (int f = 0; f < c.morphism_count(); ++f) cells[1].push_back({f});
  for (std::size_t n = 2; n < cells.size(); ++n)
    for (const auto& chain : cells[n - 1])
      for (int f = 0; f < c.morphism_count(); ++f)
        if (c.source(f) == c.target(chain.back())) {
          auto next = chain;
          next.push_back(f);
          cells[n].push_back(std::move(next));
        }
  auto face = [&c](int n, int i, const Key& k) -> Key {
    if (n == 1) return {i == 0 ? c.target(k[0]) : c.source(k[0])};
    if (i == 0) return Key(k.begin() + 1, k.end());
    if (i == n) return Key(k.begin(), k.end() - 1);
    Key out(k.begin(), k.begin() + i - 1);
    out.push_back(c.compose_checked(k[static_cast<std::size_t>(i)], k[static_cast<std::size_t>(i) - 1]));
    out.insert(out.end(), k.begin() + i + 1, k.end());
    return out;
  };
  auto degeneracy = [&c](int n, int j, const Key& k) -> Key {
    if (n == 0) return {c.identity(k[0])};
    const int obj = j == 0 ? c.source(k[0]) : c.target(k[static_cast<std::size_t>(j) - 1]);
    Key out = k;
    out.insert(out.begin() + j, c.identity(obj));
    return out;
  };
  return tabulate<Key>(cap, cells, face, degeneracy);
}

std::vector<std::vector<int>> enumerate_flags(int flag_bound, int n) {
  std::vector<std::vector<int>> out;
  if (n > flag_bound) return out;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int p = n;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == flag_bound - (n - p)) --p;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
    for (int q = p + 1; q <= n; ++q) cur[static_cast<std::size_t>(q)] = cur[static_cast<std::size_t>(q) - 1] + 1;
  }
  return out;
}

SimplicialSet flag_object(int flag_bound, int cap) {
  if (flag_bound < 0) throw ConfigError("flag_object: negative bound");
  using Key = std::vector<int>;
  std::vector<std::vector<Key>> cells;
  for (int n = 0; n <= cap; ++n) cells.push_back(enumerate_flags(flag_bound, n));
  return tabulate<Key>(
      cap, cells,
      [](int, int i, const Key& k) {
        Key out = k;
        out.erase(out.begin() + i);
        return out;
      },
      {});
}

SimplicialSet sd_simplex(int n, int cap) {
  // A chain is the list of injections a_0 : [l_0] -> [l_1], ..., a_k : [l_k] -> [n].
  using Key = std::vector<MonotoneMap>;
  std::vector<std::vector<Key>> cells(static_cast<std::size_t>(cap) + 1);
  for (int l = 0; l <= n; ++l)
    for (const auto& a : enumerate_hom(l, n, HomClass::injective)) cells[0].push_back({a});
  for (std::size_t k = 1; k < cells.size(); ++k)
    for (const auto& chain : cells[k - 1]) {
      const int top = chain.front().dom();
      for (int l = 0; l < top; ++l)
        for (const auto& a : enumerate_hom(l, top, HomClass::injective)) {
          Key next{a};
          next.insert(next.end(), chain.begin(), chain.end());
          cells[k].push_back(std::move(next));
        }
    }
  for (auto& level : cells) std::sort(level.begin(), level.end());
  return tabulate<Key>(
      cap, cells,
      [](int k, int i, const Key& c) {
        Key out;
        for (int p = 0; p <= k; ++p) {
          if (p == i) {
            if (p > 0) out.back() = compose(c[static_cast<std::size_t>(p)], out.back());
            continue;
          }
          out.push_back(c[static_cast<std::size_t>(p)]);
        }
        return out;
      },
      {});
}

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y) {
  if (x.cap() != y.cap()) throw ConfigError("product: caps differ");
  const int cap = x.cap();
  const auto levels = static_cast<std::size_t>(cap) + 1;
  std::vector<std::size_t> counts(levels);
  for (int n = 0; n <= cap; ++n) counts[static_cast<std::size_t>(n)] = x.size(n) * y.size(n);
  SimplicialSet::ActionTable faces(levels);
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
      for (Cell a = 0; a < x.size(n); ++a)
        for (Cell b = 0; b < y.size(n); ++b)
          t[product_cell(y, n, a, b)] = product_cell(y, n - 1, x.face(n, i, a), y.face(n, i, b));
      faces[static_cast<std::size_t>(n)].push_back(std::move(t));
    }
  std::optional<SimplicialSet::ActionTable> degens;
  if (!x.is_semi() && !y.is_semi()) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n)
      for (int j = 0; j <= n; ++j) {
        std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
        for (Cell a = 0; a < x.size(n); ++a)
          for (Cell b = 0; b < y.size(n); ++b)
            t[product_cell(y, n, a, b)] = product_cell(y, n + 1, x.degeneracy(n, j, a), y.degeneracy(n, j, b));
        (*degens)[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  return SimplicialSet(cap, std::move(counts), std::move(faces), std::move(degens));
}

CoproductResult coproduct(const std::vector<const SimplicialSet*>& parts) {
  if (parts.empty()) throw ConfigError("coproduct: no parts");
  const int cap = parts.front()->cap();
  const bool semi = std::any_of(parts.begin(), parts.end(), [](auto* p) { return p->is_semi(); });
  const auto levels = static_cast<std::size_t>(cap) + 1;
  CoproductResult r;
  r.offsets.assign(parts.size(), std::vector<std::size_t>(levels));
  std::vector<std::size_t> counts(levels, 0);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p]->cap() != cap) throw ConfigError("coproduct: caps differ");
    for (std::size_t n = 0; n < levels; ++n) {
      r.offsets[p][n] = counts[n];
      counts[n] += parts[p]->size(static_cast<int>(n));
    }
  }
  SimplicialSet::ActionTable faces(levels);
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<Cell> t;
      t.reserve(counts[static_cast<std::size_t>(n)]);
      for (std::size_t p = 0; p < parts.size(); ++p)
        for (Cell c : parts[p]->face_table(n, i)) t.push_back(r.cell(p, n - 1, c));
      faces[static_cast<std::size_t>(n)].push_back(std::move(t));
    }
  std::optional<SimplicialSet::ActionTable> degens;
  if (!semi) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n)
      for (int j = 0; j <= n; ++j) {
        std::vector<Cell> t;
        t.reserve(counts[static_cast<std::size_t>(n)]);
        for (std::size_t p = 0; p < parts.size(); ++p)
          for (Cell c : parts[p]->degeneracy_table(n, j)) t.push_back(r.cell(p, n + 1, c));
        (*degens)[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  r.value = SimplicialSet(cap, std::move(counts), std::move(faces), std::move(degens));
  return r;
}

CoproductResult coproduct(const std::vector<SimplicialSet>& parts) {
  std::vector<const SimplicialSet*> ptrs;
  for (const auto& p : parts) ptrs.push_back(&p);
  return coproduct(ptrs);
}

QuotientResult quotient(const SimplicialSet& x, const CellRelation& relation) {
  const int cap = x.cap();
  std::vector<UnionFind> uf;
  for (int n = 0; n <= cap; ++n) uf.emplace_back(x.size(n));
  std::deque<std::pair<CellRef, CellRef>> work;
  for (const auto& [a, b] : relation) {
    if (a.degree != b.degree) throw IllFormedRelation("quotient: related cells live in different degrees");
    if (a.degree < 0 || a.degree > cap || a.cell >= x.size(a.degree) || b.cell >= x.size(b.degree))
      throw IllFormedRelation("quotient: relation references a missing cell");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    const int n = a.degree;
    if (!uf[static_cast<std::size_t>(n)].unite(a.cell, b.cell)) continue;
    for (int i = 0; n > 0 && i <= n; ++i)
      work.push_back({{n - 1, x.face(n, i, a.cell)}, {n - 1, x.face(n, i, b.cell)}});
    if (!x.is_semi() && n < cap)
      for (int j = 0; j <= n; ++j)
        work.push_back({{n + 1, x.degeneracy(n, j, a.cell)}, {n + 1, x.degeneracy(n, j, b.cell)}});
  }
  const auto levels = static_cast<std::size_t>(cap) + 1;
  QuotientResult r;
  r.projection.components.resize(levels);
  std::vector<std::size_t> counts(levels);
  std::vector<std::vector<Cell>> rep(levels);  // class -> minimal member
  for (std::size_t n = 0; n < levels; ++n) {
    auto labels = uf[n].canonical_labels(&counts[n]);
    r.projection.components[n].assign(labels.begin(), labels.end());
    rep[n].assign(counts[n], 0);
    for (std::size_t c = labels.size(); c-- > 0;) rep[n][labels[c]] = static_cast<Cell>(c);
  }
  const auto& proj = r.projection;
  SimplicialSet::ActionTable faces(levels);
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) {
      std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
      for (std::size_t k = 0; k < t.size(); ++k)
        t[k] = proj(n - 1, x.face(n, i, rep[static_cast<std::size_t>(n)][k]));
      faces[static_cast<std::size_t>(n)].push_back(std::move(t));
    }
  std::optional<SimplicialSet::ActionTable> degens;
  if (!x.is_semi()) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n)
      for (int j = 0; j <= n; ++j) {
        std::vector<Cell> t(counts[static_cast<std::size_t>(n)]);
        for (std::size_t k = 0; k < t.size(); ++k)
          t[k] = proj(n + 1, x.degeneracy(n, j, rep[static_cast<std::size_t>(n)][k]));
        (*degens)[static_cast<std::size_t>(n)].push_back(std::move(t));
      }
  }
  r.value = SimplicialSet(cap, std::move(counts), std::move(faces), std::move(degens));
  return r;
}

ColimitResult colimit(const std::vector<SimplicialSet>& objects, const std::vector<DiagramArrow>& arrows) {
  auto sum = coproduct(objects);
  CellRelation rel;
  for (const auto& arrow : arrows)
    for (int n = 0; n <= sum.value.cap(); ++n)
      for (Cell c = 0; c < objects[arrow.source].size(n); ++c)
        rel.push_back({{n, sum.cell(arrow.source, n, c)}, {n, sum.cell(arrow.target, n, arrow.map(n, c))}});
  auto q = quotient(sum.value, rel);
  ColimitResult r;
  r.value = std::move(q.value);
  for (std::size_t p = 0; p < objects.size(); ++p) {
    SimplicialMap inj;
    inj.components.resize(static_cast<std::size_t>(r.value.cap()) + 1);
    for (int n = 0; n <= r.value.cap(); ++n)
      for (Cell c = 0; c < objects[p].size(n); ++c)
        inj.components[static_cast<std::size_t>(n)].push_back(q.projection(n, sum.cell(p, n, c)));
    r.injections.push_back(std::move(inj));
  }
  return r;
}

std::vector<std::vector<char>> image_mask(const SimplicialSet& y, const SimplicialMap& f) {
  std::vector<std::vector<char>> mask(static_cast<std::size_t>(y.cap()) + 1);
  for (int n = 0; n <= y.cap(); ++n) {
    mask[static_cast<std::size_t>(n)].assign(y.size(n), 0);
    for (Cell c : f.components[static_cast<std::size_t>(n)]) mask[static_cast<std::size_t>(n)][c] = 1;
  }
  return mask;
}

}  // namespace realcmp
