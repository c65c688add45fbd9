#pragma once

#include <functional>
#include <string>
#include <vector>

#include "realcmp/simplicial_object.hpp"
#include "realcmp/sset_ops.hpp"

namespace realcmp {

/// Colimit of X_m over a full subcategory of surjections out of [n], with the
/// map into X_n induced by v^* on the v-summand.
struct SurjectionColimit {
  int degree = 0;
  std::vector<MonotoneMap> objects;
  SimplicialSet value;
  SimplicialMap projection;                       // coproduct -> value
  std::vector<std::vector<std::size_t>> offsets;  // [object][j]
  SimplicialMap canonical_map;                    // value -> X_n

  Cell cell(std::size_t object, int j, Cell c) const {
    return projection(j, static_cast<Cell>(offsets[object][static_cast<std::size_t>(j)] + c));
  }
  /// Position of v among the objects; throws if absent.
  std::size_t position(const MonotoneMap& v) const;
};

/// The colimit over the given surjections [n] ->> [m]. Throws ValidationError when
/// the induced map into X_n is not well defined.
SurjectionColimit surjection_colimit(const SimplicialObject& x, int n, std::vector<MonotoneMap> objects);

using LatchingObject = SurjectionColimit;

/// L_n X over all surjections [n] ->> [m], m < n. Empty for n = 0.
LatchingObject latching(const SimplicialObject& x, int n);
/// L_{n,k} X over the surjections phi with phi(k) < k.
LatchingObject latching_stage(const SimplicialObject& x, int n, int k);

struct FiltrationReport {
  int degree = 0;
  std::vector<std::vector<std::size_t>> stage_sizes;  // [k-1][j]
  bool first_is_previous_level = false;               // X_{n-1} -> L_{n,1} bijective
  bool last_is_latching = false;                      // L_{n,n} -> L_n bijective
  std::vector<char> inclusions_mono;                  // L_{n,k} -> L_{n,k+1}
  std::vector<char> pushouts;                         // square at k = 1 .. n-1
  std::string detail;
  bool ok() const;
};
FiltrationReport latching_filtration(const SimplicialObject& x, int n);

struct LatchingCheck {
  int degree = 0;
  std::vector<std::size_t> sizes;  // |L_n X| per internal degree
  bool injective = false;
  bool image_is_degenerate_union = false;
};
struct CofibrancyReport {
  std::vector<LatchingCheck> degrees;  // n = 1 .. cap
  bool cofibrant() const;
};
/// Every latching map is a monomorphism; also compares its image with the union
/// of the external degeneracy images.
CofibrancyReport reedy_cofibrant_check(const SimplicialObject& x);

struct Skeleton {
  SimplicialObject value;
  std::vector<SurjectionColimit> levels;  // level m over surjections [m] ->> [k], k <= n
  ObjectMap to_x;                         // (v, x) -> v^* x
};
Skeleton skeleton(const SimplicialObject& x, int n);
/// sk_{n-1} X -> sk_n X, identity on summands.
ObjectMap skeleton_inclusion(const SimplicialObject& x, const Skeleton& lower, const Skeleton& upper);

struct SkeletonReport {
  std::vector<char> inclusions_mono;  // sk_{n-1} -> sk_n, n = 1 .. cap
  std::vector<char> maps_to_x_mono;   // sk_n -> X
  bool top_is_iso = false;            // sk_cap -> X
  bool ok() const;
};
SkeletonReport skeleton_check(const SimplicialObject& x);

}  // namespace realcmp
