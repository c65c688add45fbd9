#pragma once

#include <optional>
#include <string>
#include <vector>

#include "realcmp/simplicial_set.hpp"

namespace realcmp {

/// One generator application: d_index or s_index out of degree `degree`.
struct ActionStep {
  bool degeneracy;
  int degree;
  int index;
};
using ActionWord = std::vector<ActionStep>;

/// Generator word realizing u^* for u : [k] -> [n], read left to right.
ActionWord action_word(const MonotoneMap& u);

/// A truncated simplicial object in simplicial sets. External degree n indexes
/// the levels X_n; each level is a simplicial set of the shared internal cap.
/// Without external degeneracies it is a semi-simplicial object.
class SimplicialObject {
 public:
  using MapFamily = std::vector<std::vector<SimplicialMap>>;  // [n][i]

  SimplicialObject() = default;
  /// faces[n][i] : X_n -> X_{n-1} (faces[0] empty); degeneracies[n][j] : X_n -> X_{n+1}.
  SimplicialObject(std::vector<SimplicialSet> levels, MapFamily faces, std::optional<MapFamily> degeneracies);

  int cap() const { return static_cast<int>(levels_.size()) - 1; }
  int internal_cap() const { return levels_.front().cap(); }
  bool is_semi() const { return !has_degeneracies_; }

  const SimplicialSet& level(int n) const { return levels_[static_cast<std::size_t>(n)]; }
  const std::vector<SimplicialSet>& levels() const { return levels_; }
  const SimplicialMap& face(int n, int i) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }
  const SimplicialMap& degeneracy(int n, int j) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }
  const MapFamily& faces() const { return faces_; }
  const MapFamily& degeneracies() const { return degeneracies_; }

  /// Image of the internal j-cell c of X_{cod u} under the external u^*.
  Cell apply(const ActionWord& word, int j, Cell c) const;
  Cell act(const MonotoneMap& u, int j, Cell c) const { return apply(action_word(u), j, c); }
  /// u^* as a simplicial map X_{cod u} -> X_{dom u}.
  SimplicialMap act_map(const MonotoneMap& u) const;

  /// Levels, external maps and external simplicial identities; throws ValidationError.
  void validate() const;

  SimplicialObject restrict_to_faces() const;
  /// Restrict both external and internal degrees.
  SimplicialObject truncated(int cap, int internal_cap) const;

 private:
  std::vector<SimplicialSet> levels_;
  bool has_degeneracies_ = false;
  MapFamily faces_;
  MapFamily degeneracies_;
};

/// Levels X_n = constant simplicial sets on the n-cells of y, external structure from y.
SimplicialObject discrete_object(const SimplicialSet& y, int internal_cap);
/// Every level equal to y, all external operators the identity.
SimplicialObject constant_object(const SimplicialSet& y, int cap);
SimplicialObject point_object(int cap, int internal_cap);

/// Levelwise maps f_n : X_n -> Y_n.
struct ObjectMap {
  std::vector<SimplicialMap> components;
};

ObjectMap identity_map(const SimplicialObject& x);
ObjectMap compose(const ObjectMap& g, const ObjectMap& f);
/// Empty when every component is simplicial and commutes with the external structure.
std::optional<std::string> object_map_violation(const SimplicialObject& source, const SimplicialObject& target,
                                                const ObjectMap& f);

/// diag(X)_n = (X_n)_n with d_i, s_j acting in both directions at once.
SimplicialSet diagonal(const SimplicialObject& x);
SimplicialMap diagonal(const ObjectMap& f);

}  // namespace realcmp
