#pragma once

#include <optional>
#include <string>
#include <vector>

namespace realcmp {

/// A small category with finitely many objects and morphisms, given by its
/// full composition table.
class FiniteCategory {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    std::string label;
  };
  struct Composite {
    int second;  // g
    int first;   // f
    int result;  // g o f
  };

  FiniteCategory() = default;
  /// Throws ValidationError unless the data form a category.
  FiniteCategory(int object_count, std::vector<Morphism> morphisms, std::vector<int> identities,
                 const std::vector<Composite>& composition, std::vector<std::string> object_labels = {});

  int object_count() const { return object_count_; }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int f) const { return morphisms_[static_cast<std::size_t>(f)]; }
  int source(int f) const { return morphism(f).source; }
  int target(int f) const { return morphism(f).target; }
  int identity(int object) const { return identities_[static_cast<std::size_t>(object)]; }
  bool is_identity(int f) const { return identity(source(f)) == f; }
  const std::string& object_label(int x) const { return object_labels_[static_cast<std::size_t>(x)]; }

  /// g o f, or nullopt when target(f) != source(g).
  std::optional<int> compose(int g, int f) const;
  /// As compose, but throws CompositionMismatch when not composable.
  int compose_checked(int g, int f) const;

  std::vector<Composite> composition_triples() const;
  const std::vector<int>& identities() const { return identities_; }

  void validate() const;

 private:
  int object_count_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> table_;  // [g * M + f] -> g o f or -1
  std::vector<std::string> object_labels_;
};

FiniteCategory terminal_category();
/// The linear order [n] = {0 < 1 < ... < n}.
FiniteCategory poset_category(int n);
/// One object, morphisms {0, 1}, a o b = a or b, identity 0.
FiniteCategory or_category();
FiniteCategory discrete_category(int objects);
/// Two objects and a unique isomorphism between them.
FiniteCategory iso_groupoid();

/// Morphism (f, i <= j) of the unraveled category, in morphism order.
struct UnravelMorphism {
  int f, i, j;
};
std::vector<UnravelMorphism> unravel_morphisms(const FiniteCategory& c, int flag_bound);
/// Subcategory of C x {0..N} obtained by deleting (f, i <= i) with f != id.
/// Object (x, i) has index x * (N + 1) + i.
FiniteCategory unravel_category(const FiniteCategory& c, int flag_bound);

/// Morphism (f, a) of the fat category, a in {0, 1}, in morphism order.
struct FatMorphism {
  int f, a;
};
std::vector<FatMorphism> fat_morphisms(const FiniteCategory& c);
/// Subcategory of C x OR obtained by deleting (f, 0) with f != id.
FiniteCategory fat_category(const FiniteCategory& c);

}  // namespace realcmp
