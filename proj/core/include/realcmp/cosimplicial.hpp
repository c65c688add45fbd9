#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realcmp/constructions.hpp"

namespace realcmp {

/// A truncated cosimplicial simplicial set: levels C^n with cofaces C^{n-1} -> C^n
/// and codegeneracies C^{n+1} -> C^n.
class CosimplicialObject {
 public:
  using MapFamily = std::vector<std::vector<SimplicialMap>>;

  CosimplicialObject() = default;
  CosimplicialObject(std::vector<SimplicialSet> levels, MapFamily cofaces, MapFamily codegeneracies);

  int cap() const { return static_cast<int>(levels_.size()) - 1; }
  int internal_cap() const { return levels_.front().cap(); }
  const SimplicialSet& level(int n) const { return levels_[static_cast<std::size_t>(n)]; }
  const SimplicialMap& coface(int n, int i) const {
    return cofaces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }
  const SimplicialMap& codegeneracy(int n, int j) const {
    return codegeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }

  /// u_* c for u : [n'] -> [n] and c an internal j-cell of C^{n'}.
  Cell coact(const MonotoneMap& u, int j, Cell c) const;

  /// Levels, coface/codegeneracy maps and the cosimplicial identities.
  void validate() const;

 private:
  std::vector<SimplicialSet> levels_;
  MapFamily cofaces_;         // [n][i] : C^{n-1} -> C^n
  MapFamily codegeneracies_;  // [n][j] : C^{n+1} -> C^n
};

struct CosimplicialMap {
  std::vector<SimplicialMap> components;
};
std::optional<std::string> cosimplicial_map_violation(const CosimplicialObject& source,
                                                      const CosimplicialObject& target, const CosimplicialMap& f);

/// Cells (u : [r] -> [n], v : [j] ->> [r]).
struct FatCell {
  MonotoneMap u, v;
  friend auto operator<=>(const FatCell&, const FatCell&) = default;
  friend bool operator==(const FatCell&, const FatCell&) = default;
};
/// Cells (u : [r] -> [n], v : [j] ->> [r], flag in S_r).
struct FlaggedCell {
  MonotoneMap u, v;
  std::vector<int> flag;
  friend auto operator<=>(const FlaggedCell&, const FlaggedCell&) = default;
  friend bool operator==(const FlaggedCell&, const FlaggedCell&) = default;
};
/// Cells (chain [r_0] -> ... -> [r_j], u : [r_j] -> [n]).
struct ChainCell {
  ChainKey chain;
  MonotoneMap u;
  friend auto operator<=>(const ChainCell&, const ChainCell&) = default;
  friend bool operator==(const ChainCell&, const ChainCell&) = default;
};
/// Cells (x : [l_k] -> [n], strict chain [l_0] >-> ... >-> [l_k], s : [j] ->> [k]).
struct SubdividedCell {
  MonotoneMap x;
  ChainKey chain;
  MonotoneMap s;
  friend auto operator<=>(const SubdividedCell&, const SubdividedCell&) = default;
  friend bool operator==(const SubdividedCell&, const SubdividedCell&) = default;
};

/// A cosimplicial object together with the keys naming its cells.
template <class Key>
struct KeyedCosimplicial {
  CosimplicialObject object;
  std::vector<std::vector<std::vector<Key>>> keys;              // [n][j][cell]
  std::vector<std::vector<std::map<Key, Cell>>> index;          // [n][j]
  Cell find(int n, int j, const Key& k) const {
    return index[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)].at(k);
  }
  const Key& key(int n, int j, Cell c) const {
    return keys[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][c];
  }
};

using StandardCosimplicial = KeyedCosimplicial<MonotoneMap>;
using FatCosimplicial = KeyedCosimplicial<FatCell>;
using UnravelCosimplicial = KeyedCosimplicial<FlaggedCell>;
using SimpCosimplicial = KeyedCosimplicial<ChainCell>;
using SubdividedCosimplicial = KeyedCosimplicial<SubdividedCell>;

/// The standard simplices.
StandardCosimplicial standard_cosimplicial(int cap, int internal_cap);
FatCosimplicial fat_cosimplicial(int cap, int internal_cap);
UnravelCosimplicial unravel_cosimplicial(int cap, int internal_cap, int flag_bound);
SimpCosimplicial simp_cosimplicial(int cap, int internal_cap, int chain_bound);
/// Left Kan extension of the coend over [m] in Delta_+ of the m-simplices of a
/// standard simplex against the subdivided m-simplex, with l_k <= subdivision_bound.
SubdividedCosimplicial subdivided_cosimplicial(int cap, int internal_cap, int subdivision_bound);

/// (u, v) -> u o v.
CosimplicialMap q_cosimplicial(const FatCosimplicial& from, const StandardCosimplicial& to);
/// Forget the flag.
CosimplicialMap pi_cosimplicial(const UnravelCosimplicial& from, const FatCosimplicial& to);
/// (chain, u) -> u o last_vertex(chain).
CosimplicialMap last_vertex_cosimplicial(const SimpCosimplicial& from, const StandardCosimplicial& to);
/// The cell formulas behind beta_cosimplicial and tau_cosimplicial.
FatCell beta_cell(const SubdividedCell& c);
FlaggedCell tau_cell(const SubdividedCell& c);

/// The subdivision comparison: (x, chain, s) -> (x o u, s), u the last vertex map of the chain.
CosimplicialMap beta_cosimplicial(const SubdividedCosimplicial& from, const FatCosimplicial& to);
/// tau: (x, chain, s) -> (x o u, s, flag l_0 < ... < l_k), u the last vertex map of the chain.
CosimplicialMap tau_cosimplicial(const SubdividedCosimplicial& from, const UnravelCosimplicial& to);

}  // namespace realcmp
