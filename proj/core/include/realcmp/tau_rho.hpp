#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "realcmp/coend.hpp"
#include "realcmp/homology.hpp"

namespace realcmp {

/// A cell (x, [l_0] >-> ... >-> [l_k] >-> [m]) of the coproduct over m of the m-simplices
/// of the standard n-simplex times the subdivided m-simplex. chain[p] : [l_p] -> [l_{p+1}],
/// the last one landing in [m] = [x.dom()].
struct SdCell {
  MonotoneMap x;
  std::vector<MonotoneMap> chain;
  friend auto operator<=>(const SdCell&, const SdCell&) = default;
  friend bool operator==(const SdCell&, const SdCell&) = default;
};

struct TauValue {
  MonotoneMap simplex;    // u^* x
  std::vector<int> flag;  // l_0 < ... < l_k
  friend bool operator==(const TauValue&, const TauValue&) = default;
};

/// u : [k] -> [m], u(i) the image of the top element of [l_i].
MonotoneMap sd_last_vertex(const std::vector<MonotoneMap>& chain);
TauValue tau_bar(const SdCell& c);

struct TauSemiReport {
  int n = 0, flag_bound = 0, cap = 0;
  std::vector<std::vector<SdCell>> raw_cells;  // [k][cell]
  SimplicialSet raw;
  SimplicialSet domain;      // raw modulo (x o d, c) ~ (x, d o c) for injective d
  SimplicialMap projection;  // raw -> domain
  SimplicialSet target;      // faces-only n-simplex times the flag object
  SimplicialMap map;         // domain -> target
  bool descends = false;
  bool commutes_with_faces = false;
  std::string detail;
  bool ok() const { return descends && commutes_with_faces; }
  Cell raw_cell(int k, const SdCell& c) const;
  Cell target_cell(int k, const TauValue& v) const;
};
/// Throws ConfigError when flag_bound < cap.
TauSemiReport tau_semisimplicial(int n, int flag_bound, int cap);

/// tau and beta on coends. The source is X (truncated one degree below X's cap) against
/// the subdivided matrix; fat and unraveled sides are at X's cap and are reached through
/// the inverses of the associativity bijections.
struct TauOnCoends {
  int source_cap = 0, target_cap = 0, flag_bound = 0;
  CoendResult subdivided;
  AssocMap fat_side, unravel_side;
  SimplicialMap tau;   // subdivided -> unravel_side.construction
  SimplicialMap beta;  // subdivided -> fat_side.construction
  SimplicialMap pi;    // unravel_side.construction -> fat_side.construction
  bool well_defined = false;
  bool pi_tau_is_beta = false;
  std::string detail;
};
/// Throws ConfigError when flag_bound < cap or cap < 1, and ValidationError when an
/// associativity map is not a bijection.
TauOnCoends tau_on_coends(const SimplicialObject& x, int flag_bound);

struct NaturalityReport {
  bool commutes = false;
  std::string detail;
};
/// tau_Y o (f against the subdivided matrix) = (f^N)_* o tau_X, cellwise.
NaturalityReport tau_naturality(const SimplicialObject& x, const SimplicialObject& y, const ObjectMap& f,
                                int flag_bound);

struct PiTauVerdict {
  int max_degree = 0, flag_bound = 0, cap = 0;
  bool pi_tau_is_beta = false;
  IsoVerdict beta, pi_tau;
  AgreementVerdict agreement;  // (pi o tau)_* = beta_*
  std::string detail;
  bool ok() const {
    return pi_tau_is_beta && beta.iso && pi_tau.iso && agreement.agree && agreement.conclusive;
  }
};
/// Needs max_degree + 2 <= cap.
PiTauVerdict check_pi_tau(const SimplicialObject& x, int flag_bound, int max_degree);

using Rational = boost::multiprecision::cpp_rational;

struct BarycentricPoint {
  std::vector<Rational> t;
  /// Throws ConfigError unless the coordinates are nonnegative and sum to 1.
  explicit BarycentricPoint(std::vector<Rational> coordinates);
  int dimension() const { return static_cast<int>(t.size()) - 1; }
  /// The point on the i-th face: a zero inserted at position i.
  BarycentricPoint coface(int i) const;
};

/// (j+1) * sum over (j+1)-subsets E of max(0, min_E t - max_{not E} t); max over nothing is 0.
Rational s_fold(const BarycentricPoint& p, int j);
/// (s_0, ..., s_n).
std::vector<Rational> s_fold_all(const BarycentricPoint& p);
/// Closed form through order statistics: (j+1) (t_(j) - t_(j+1)), t sorted descending.
Rational s_fold_sorted(const BarycentricPoint& p, int j);

/// A point of the realization of the unraveled n-simplex in normal form.
struct RhoPoint {
  std::vector<int> vertices;           // support, increasing, in [n]
  std::vector<int> flag;               // flag entries over the support
  std::vector<Rational> coordinates;   // positive, over the support
  std::vector<Rational> ambient(int n) const;
  friend bool operator==(const RhoPoint&, const RhoPoint&) = default;
};

struct RhoWitness {
  int n = 0, face = 0;
  std::vector<Rational> t;  // the point of the n-simplex, zero at `face`
  RhoPoint lhs;             // assignment in dimension n at t
  RhoPoint rhs;             // assignment in dimension n-1 at the face preimage, then the face
  std::vector<Rational> discrepancy;  // lhs - rhs per ambient coordinate
  Rational total;                     // sum of absolute discrepancies
  bool flags_differ = false;
};
/// The two routes around the face square of the assignment with y the top simplex.
RhoPoint rho_direct(const BarycentricPoint& t);
RhoPoint rho_through_face(const BarycentricPoint& preimage, int face);
/// First witness over grid points of the n-simplex with denominators grid_resolution,
/// in lexicographic order of numerators, then face index.
std::optional<RhoWitness> rho_face_counterexample(int n, int grid_resolution);
/// Re-evaluates both routes in ambient coordinates through s_fold_sorted.
bool verify_rho_witness(const RhoWitness& w);
nlohmann::json to_json(const RhoWitness& w);

}  // namespace realcmp
