#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "realcmp/finite_category.hpp"
#include "realcmp/simplicial_object.hpp"
#include "realcmp/sset_ops.hpp"

namespace realcmp {

/// A simplicial object whose level n is the coproduct over summand keys a of
/// the base levels B_{deg a}. An external u moves summand a to route(a, u) = (b, w)
/// and acts on cells by w^* : B_{deg a} -> B_{deg b}.
template <class Key>
class SummandObject {
 public:
  struct Route {
    Key target;
    MonotoneMap along;  // [deg target] -> [deg source]
  };
  using RouteFn = std::function<Route(const Key&, const MonotoneMap&)>;
  using DegreeFn = std::function<int(const Key&)>;

  SummandObject() = default;
  SummandObject(const SimplicialObject& base, std::vector<std::vector<Key>> keys, DegreeFn degree, RouteFn route,
                bool with_degeneracies);

  const SimplicialObject& object() const { return object_; }
  int cap() const { return object_.cap(); }
  const std::vector<Key>& keys(int n) const { return keys_[static_cast<std::size_t>(n)]; }
  int base_degree(int n, std::size_t a) const { return degree_(keys(n)[a]); }
  std::size_t find(int n, const Key& k) const { return index_[static_cast<std::size_t>(n)].at(k); }
  Route route(const Key& k, const MonotoneMap& u) const { return route_(k, u); }

  /// Cell of the coproduct for base cell c (internal degree j) of summand a.
  Cell cell(int n, std::size_t a, int j, Cell c) const {
    return static_cast<Cell>(offsets_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][a] + c);
  }
  /// Inverse of cell().
  std::pair<std::size_t, Cell> locate(int n, int j, Cell c) const {
    const auto& off = offsets_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
    auto it = std::upper_bound(off.begin(), off.end(), static_cast<std::size_t>(c));
    const auto a = static_cast<std::size_t>(it - off.begin()) - 1;
    return {a, static_cast<Cell>(c - off[a])};
  }

 private:
  SimplicialObject object_;
  std::vector<std::vector<Key>> keys_;
  std::vector<std::map<Key, std::size_t>> index_;
  std::vector<std::vector<std::vector<std::size_t>>> offsets_;  // [n][j][a], trailing total
  DegreeFn degree_;
  RouteFn route_;
};

template <class Key>
SummandObject<Key>::SummandObject(const SimplicialObject& base, std::vector<std::vector<Key>> keys, DegreeFn degree,
                                  RouteFn route, bool with_degeneracies)
    : keys_(std::move(keys)), degree_(std::move(degree)), route_(std::move(route)) {
  const int cap = static_cast<int>(keys_.size()) - 1;
  const int ic = base.internal_cap();
  index_.resize(keys_.size());
  offsets_.resize(keys_.size());
  std::vector<SimplicialSet> levels;
  for (int n = 0; n <= cap; ++n) {
    const auto& ks = keys_[static_cast<std::size_t>(n)];
    std::vector<const SimplicialSet*> parts;
    for (std::size_t a = 0; a < ks.size(); ++a) {
      if (!index_[static_cast<std::size_t>(n)].emplace(ks[a], a).second)
        throw ValidationError("SummandObject: duplicate summand key");
      parts.push_back(&base.level(degree_(ks[a])));
    }
    auto& off = offsets_[static_cast<std::size_t>(n)];
    off.assign(static_cast<std::size_t>(ic) + 1, {});
    for (int j = 0; j <= ic; ++j) {
      std::size_t total = 0;
      for (const auto* p : parts) {
        off[static_cast<std::size_t>(j)].push_back(total);
        total += p->size(j);
      }
      off[static_cast<std::size_t>(j)].push_back(total);
    }
    if (parts.empty()) throw ValidationError("SummandObject: empty level " + std::to_string(n));
    levels.push_back(coproduct(parts).value);
  }
  auto family = [&](int n, const MonotoneMap& u, int target_level) {
    SimplicialMap f;
    f.components.assign(static_cast<std::size_t>(ic) + 1, {});
    std::vector<std::pair<std::size_t, ActionWord>> moves;
    for (const auto& k : keys_[static_cast<std::size_t>(n)]) {
      auto r = route_(k, u);
      moves.emplace_back(index_[static_cast<std::size_t>(target_level)].at(r.target), action_word(r.along));
    }
    for (int j = 0; j <= ic; ++j) {
      auto& comp = f.components[static_cast<std::size_t>(j)];
      comp.reserve(levels[static_cast<std::size_t>(n)].size(j));
      for (std::size_t a = 0; a < moves.size(); ++a) {
        const auto& src = base.level(degree_(keys_[static_cast<std::size_t>(n)][a]));
        for (Cell c = 0; c < src.size(j); ++c)
          comp.push_back(cell(target_level, moves[a].first, j, base.apply(moves[a].second, j, c)));
      }
    }
    return f;
  };
  SimplicialObject::MapFamily faces(keys_.size());
  for (int n = 1; n <= cap; ++n)
    for (int i = 0; i <= n; ++i) faces[static_cast<std::size_t>(n)].push_back(family(n, MonotoneMap::coface(n, i), n - 1));
  std::optional<SimplicialObject::MapFamily> degens;
  if (with_degeneracies) {
    degens.emplace(static_cast<std::size_t>(cap));
    for (int n = 0; n < cap; ++n)
      for (int j = 0; j <= n; ++j)
        (*degens)[static_cast<std::size_t>(n)].push_back(family(n, MonotoneMap::codegeneracy(n, j), n + 1));
  }
  object_ = SimplicialObject(std::move(levels), std::move(faces), std::move(degens));
}

/// Summand index of the left Kan extension and of X^fat: a surjection v : [n] ->> [k].
using SurjectionKey = MonotoneMap;

/// Summand index of X^N: a surjection v : [n] ->> [k] and a flag in S_k.
struct FlaggedKey {
  MonotoneMap surjection;
  std::vector<int> flag;
  friend auto operator<=>(const FlaggedKey&, const FlaggedKey&) = default;
  friend bool operator==(const FlaggedKey&, const FlaggedKey&) = default;
};

/// Summand index of X^simp: a chain [r_0] -> ... -> [r_k]. maps[p] : [r_p] -> [r_{p+1}].
struct ChainKey {
  int r0 = 0;
  std::vector<MonotoneMap> maps;

  int length() const { return static_cast<int>(maps.size()); }
  int stage(int p) const { return p == 0 ? r0 : maps[static_cast<std::size_t>(p) - 1].cod(); }
  int top() const { return stage(length()); }
  /// Composite [r_p] -> [r_q] for p <= q.
  MonotoneMap composite(int p, int q) const;
  /// Re-index along u : [k'] -> [k].
  ChainKey reindex(const MonotoneMap& u) const;
  /// v(i) = image of the top element of [r_i] in [r_k].
  MonotoneMap last_vertex() const;

  friend auto operator<=>(const ChainKey&, const ChainKey&) = default;
  friend bool operator==(const ChainKey&, const ChainKey&) = default;
};
/// All chains of length k with every r_p <= bound, in ChainKey order.
std::vector<ChainKey> enumerate_chains(int k, int bound);

using FatObject = SummandObject<SurjectionKey>;
using UnravelObject = SummandObject<FlaggedKey>;
using SimpObject = SummandObject<ChainKey>;

/// Level n is the coproduct over v : [n] ->> [k] of Y_k; u acts by i^* into the s-summand
/// where v o u = i o s.
FatObject left_kan_extend(const SimplicialObject& y);
/// Left Kan extension of the face restriction.
FatObject fat(const SimplicialObject& x);
/// Left Kan extension of the face restriction times the flag object S^(N).
UnravelObject unravel(const SimplicialObject& x, int flag_bound);
/// Chains in the simplex category with every stage [r] bounded by chain_bound.
SimpObject simp(const SimplicialObject& x, int chain_bound);

/// q : X^fat -> X, v-summand by v^*.
ObjectMap proj_q(const FatObject& fx, const SimplicialObject& x);
/// pi : X^N -> X^fat, forgetting the flag.
ObjectMap proj_pi(const UnravelObject& ux, const FatObject& fx);
/// The last vertex map X^simp -> X.
ObjectMap last_vertex(const SimpObject& sx, const SimplicialObject& x);

/// Functoriality of the constructions in X: summandwise application of f.
ObjectMap fat_map(const FatObject& fx, const FatObject& fy, const ObjectMap& f);
ObjectMap unravel_map(const UnravelObject& ux, const UnravelObject& uy, const ObjectMap& f);
ObjectMap simp_map(const SimpObject& sx, const SimpObject& sy, const ObjectMap& f);

/// The nerve of a finite category as a simplicial object with discrete levels.
SimplicialObject nerve_object(const FiniteCategory& c, int cap);

struct NerveCompatReport {
  std::string kind;
  std::vector<std::size_t> left_counts;   // level sizes of the nerve side, internal degree 0
  std::vector<std::size_t> right_counts;  // level sizes of the construction side
  bool is_map = false;
  bool bijective = false;
  std::string detail;
  bool ok() const { return is_map && bijective; }
};
/// nerve(C^N) against unravel(nerve C, N) through the canonical comparison.
NerveCompatReport nerve_compat_unravel(const FiniteCategory& c, int flag_bound, int cap);
/// nerve(C^fat) against fat(nerve C).
NerveCompatReport nerve_compat_fat(const FiniteCategory& c, int cap);

}  // namespace realcmp
