#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "realcmp/finite_category.hpp"
#include "realcmp/simplicial_set.hpp"

namespace realcmp {

/// Build a simplicial set from explicit cell keys. Face and degeneracy images are
/// looked up among the keys of the neighbouring degree; a missing key throws.
template <class Key>
SimplicialSet tabulate(int cap, const std::vector<std::vector<Key>>& cells,
                       const std::function<Key(int n, int i, const Key&)>& face,
                       const std::function<Key(int n, int j, const Key&)>& degeneracy,
                       const std::function<std::string(const Key&)>& label = {}) {
  const auto levels = static_cast<std::size_t>(cap) + 1;
  if (cells.size() != levels) throw ValidationError("tabulate: need cap+1 key lists");
  std::vector<std::map<Key, Cell>> index(levels);
  std::vector<std::size_t> counts(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    counts[n] = cells[n].size();
    for (std::size_t c = 0; c < cells[n].size(); ++c)
      if (!index[n].emplace(cells[n][c], static_cast<Cell>(c)).second)
        throw ValidationError("tabulate: duplicate key in degree " + std::to_string(n));
  }
  auto find = [&](std::size_t n, const Key& k) {
    auto it = index[n].find(k);
    if (it == index[n].end()) throw ValidationError("tabulate: image key missing in degree " + std::to_string(n));
    return it->second;
  };
  SimplicialSet::ActionTable faces(levels);
  for (int n = 1; n <= cap; ++n) {
    const auto un = static_cast<std::size_t>(n);
    faces[un].assign(un + 1, std::vector<Cell>(counts[un]));
    for (int i = 0; i <= n; ++i)
      for (std::size_t c = 0; c < counts[un]; ++c)
        faces[un][static_cast<std::size_t>(i)][c] = find(un - 1, face(n, i, cells[un][c]));
  }
  std::optional<SimplicialSet::ActionTable> degens;
  if (degeneracy) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n) {
      const auto un = static_cast<std::size_t>(n);
      (*degens)[un].assign(un + 1, std::vector<Cell>(counts[un]));
      for (int j = 0; j <= n; ++j)
        for (std::size_t c = 0; c < counts[un]; ++c)
          (*degens)[un][static_cast<std::size_t>(j)][c] = find(un + 1, degeneracy(n, j, cells[un][c]));
    }
  }
  SimplicialSet::Labels labels;
  if (label) {
    labels.resize(levels);
    for (std::size_t n = 0; n < levels; ++n)
      for (const auto& k : cells[n]) labels[n].push_back(label(k));
  }
  return SimplicialSet(cap, std::move(counts), std::move(faces), std::move(degens), std::move(labels));
}

/// The standard simplex: k-cells are the monotone maps [k] -> [n].
SimplicialSet standard_simplex(int n, int cap);
/// The terminal simplicial set.
SimplicialSet point(int cap);
/// `count` cells in every degree, all operators the identity.
SimplicialSet constant_set(std::size_t count, int cap);

/// Composable chains x_0 -> ... -> x_n. d_0 and d_n drop an end, inner faces
/// compose, s_j inserts the identity of x_j.
SimplicialSet nerve(const FiniteCategory& c, int cap);

/// Semi-simplicial flags i_0 < ... < i_n in {0..N}; d_i deletes entry i.
SimplicialSet flag_object(int flag_bound, int cap);
/// Degree-n cells of flag_object in cell order.
std::vector<std::vector<int>> enumerate_flags(int flag_bound, int n);

/// Semi-simplicial chains [l_0] >-> ... >-> [l_k] >-> [n] with l_0 < ... < l_k <= n.
SimplicialSet sd_simplex(int n, int cap);

SimplicialSet product(const SimplicialSet& x, const SimplicialSet& y);
inline Cell product_cell(const SimplicialSet& y, int n, Cell a, Cell b) {
  return static_cast<Cell>(a * y.size(n) + b);
}

struct CoproductResult {
  SimplicialSet value;
  std::vector<std::vector<std::size_t>> offsets;  // [part][degree]
  Cell cell(std::size_t part, int n, Cell c) const {
    return static_cast<Cell>(offsets[part][static_cast<std::size_t>(n)] + c);
  }
};
CoproductResult coproduct(const std::vector<const SimplicialSet*>& parts);
CoproductResult coproduct(const std::vector<SimplicialSet>& parts);

struct CellRef {
  int degree;
  Cell cell;
};
using CellRelation = std::vector<std::pair<CellRef, CellRef>>;

struct QuotientResult {
  SimplicialSet value;
  SimplicialMap projection;
};
/// Quotient by the smallest congruence containing the relation. Classes are
/// numbered by their minimal member. Pairs across degrees throw IllFormedRelation.
QuotientResult quotient(const SimplicialSet& x, const CellRelation& relation);

struct DiagramArrow {
  std::size_t source;
  std::size_t target;
  SimplicialMap map;
};
struct ColimitResult {
  SimplicialSet value;
  std::vector<SimplicialMap> injections;
};
/// Colimit of a finite diagram of simplicial sets: coproduct modulo f(x) ~ x.
ColimitResult colimit(const std::vector<SimplicialSet>& objects, const std::vector<DiagramArrow>& arrows);

/// mask[n][y] is 1 when y lies in the image of f.
std::vector<std::vector<char>> image_mask(const SimplicialSet& y, const SimplicialMap& f);

}  // namespace realcmp
