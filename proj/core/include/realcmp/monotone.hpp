#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "realcmp/error.hpp"

namespace realcmp {

/// Largest ordinal [n] a MonotoneMap may touch. Keeps codes packable into 64 bits.
inline constexpr int kMaxOrdinal = 12;

/// An order-preserving map [dom] -> [cod], stored as its value sequence.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  MonotoneMap(int cod, std::vector<int> values);
  MonotoneMap(int cod, std::initializer_list<int> values)
      : MonotoneMap(cod, std::vector<int>(values)) {}

  static MonotoneMap identity(int n);
  /// Coface delta_i : [n-1] -> [n], skipping i.
  static MonotoneMap coface(int n, int i);
  /// Codegeneracy sigma_j : [n+1] -> [n], hitting j twice.
  static MonotoneMap codegeneracy(int n, int j);
  /// The unique map [k] -> [0].
  static MonotoneMap to_point(int k);
  /// The map [0] -> [n] picking v.
  static MonotoneMap vertex(int n, int v);

  int dom() const { return static_cast<int>(values_.size()) - 1; }
  int cod() const { return cod_; }
  std::span<const int> values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  /// Injective 64-bit code (dom, cod, values). Used as a hash key.
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend auto operator<=>(const MonotoneMap& a, const MonotoneMap& b) {
    if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
    return a.values_ <=> b.values_;
  }

 private:
  int cod_ = 0;
  std::vector<int> values_{0};
};

/// g o f. Throws CompositionMismatch unless f.cod() == g.dom().
MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f);

struct EpiMono {
  MonotoneMap surjection;
  MonotoneMap injection;
};

/// The unique factorization u = injection o surjection.
EpiMono epi_mono_factorize(const MonotoneMap& u);

enum class HomClass { all, surjective, injective };

/// Every map [k] -> [n] of the requested class, lexicographic in value sequences.
std::vector<MonotoneMap> enumerate_hom(int k, int n, HomClass cls = HomClass::all);

/// |hom([k],[n])| for the class, from the closed binomial formulas.
std::uint64_t hom_count(int k, int n, HomClass cls = HomClass::all);

std::uint64_t binomial(int n, int k);

/// Indexed, cached hom-set: position of each map in enumerate_hom order.
class HomSet {
 public:
  HomSet(int k, int n, HomClass cls = HomClass::all);

  int source() const { return k_; }
  int target() const { return n_; }
  std::size_t size() const { return maps_.size(); }
  const MonotoneMap& operator[](std::size_t i) const { return maps_[i]; }
  const std::vector<MonotoneMap>& maps() const { return maps_; }
  /// Position of u; throws std::out_of_range if u is not a member.
  std::size_t index(const MonotoneMap& u) const;
  bool contains(const MonotoneMap& u) const { return lookup_.contains(u.code()); }

 private:
  int k_;
  int n_;
  std::vector<MonotoneMap> maps_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
};

/// Decomposition of an injection into cofaces: the missing values, descending.
/// Applying d_j for j in this order realizes u^*.
std::vector<int> missing_values_descending(const MonotoneMap& injection);

/// Positions j with s(j) == s(j+1), ascending. Applying s_j in this order realizes s^*.
std::vector<int> repeat_positions_ascending(const MonotoneMap& surjection);

/// A monotone surjection [n] ->> [m] with m < n, and the arrows between them.
struct LatchingArrow {
  std::size_t source;  // index into objects
  std::size_t target;
  MonotoneMap map;     // map o objects[source] == objects[target]
};

/// The index category of surjections out of [n] with strictly smaller codomain.
class LatchingIndexCategory {
 public:
  explicit LatchingIndexCategory(int n);

  int degree() const { return n_; }
  const std::vector<MonotoneMap>& objects() const { return objects_; }
  const std::vector<LatchingArrow>& arrows() const { return arrows_; }

  /// phi(k) < k: phi factors through some sigma_j with j < k.
  static bool in_filtration_stage(const MonotoneMap& phi, int k);
  /// phi(k) == phi(k+1): phi factors through sigma_k.
  static bool factors_through_codegeneracy(const MonotoneMap& phi, int k);

  /// Indices of objects satisfying pred, in object order.
  std::vector<std::size_t> select(const std::function<bool(const MonotoneMap&)>& pred) const;

 private:
  int n_;
  std::vector<MonotoneMap> objects_;
  std::vector<LatchingArrow> arrows_;
};

LatchingIndexCategory latching_category(int n);

}  // namespace realcmp

template <>
struct std::hash<realcmp::MonotoneMap> {
  std::size_t operator()(const realcmp::MonotoneMap& u) const noexcept {
    return std::hash<std::uint64_t>{}(u.code());
  }
};
