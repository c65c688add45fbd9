#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "realcmp/monotone.hpp"

namespace realcmp {

using Cell = std::uint32_t;

/// A degree-truncated finite simplicial set, or a semi-simplicial set when it
/// carries no degeneracies. Cells are positional: (degree, index).
class SimplicialSet {
 public:
  /// table[n][i][cell]; faces[0] is empty, degeneracies has entries 0..cap-1.
  using ActionTable = std::vector<std::vector<std::vector<Cell>>>;
  using Labels = std::vector<std::vector<std::string>>;

  SimplicialSet() = default;
  SimplicialSet(int cap, std::vector<std::size_t> counts, ActionTable faces,
                std::optional<ActionTable> degeneracies, Labels labels = {});

  int cap() const { return cap_; }
  bool is_semi() const { return !has_degeneracies_; }
  std::size_t size(int n) const { return counts_[static_cast<std::size_t>(n)]; }
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t total_cells() const;

  Cell face(int n, int i, Cell c) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)][c];
  }
  Cell degeneracy(int n, int j, Cell c) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)][c];
  }
  std::span<const Cell> face_table(int n, int i) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
  }
  std::span<const Cell> degeneracy_table(int n, int j) const {
    return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
  }

  /// u^* c for u : [k] -> [n] and c of degree n. Injective u only, for semi-simplicial sets.
  Cell act(const MonotoneMap& u, Cell c) const;

  bool is_degenerate(int n, Cell c) const {
    return degenerate_.empty() ? false : degenerate_[static_cast<std::size_t>(n)][c] != 0;
  }
  std::size_t nondegenerate_count(int n) const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int n, Cell c) const {
    return labels_[static_cast<std::size_t>(n)][c];
  }
  const Labels& labels() const { return labels_; }

  /// Exhaustive check of the simplicial identities below the cap; throws ValidationError.
  void validate() const;

  /// The same object restricted to degrees <= new_cap.
  SimplicialSet truncated(int new_cap) const;
  /// Forget degeneracies.
  SimplicialSet as_semi() const;

  const ActionTable& faces() const { return faces_; }
  const ActionTable& degeneracies() const { return degeneracies_; }

 private:
  int cap_ = -1;
  bool has_degeneracies_ = false;
  std::vector<std::size_t> counts_;
  ActionTable faces_;
  ActionTable degeneracies_;
  std::vector<std::vector<char>> degenerate_;
  Labels labels_;
};

/// Degreewise cell functions between two simplicial sets of equal cap.
struct SimplicialMap {
  std::vector<std::vector<Cell>> components;  // [degree][cell]

  Cell operator()(int n, Cell c) const { return components[static_cast<std::size_t>(n)][c]; }
  int cap() const { return static_cast<int>(components.size()) - 1; }
  friend bool operator==(const SimplicialMap&, const SimplicialMap&) = default;
};

SimplicialMap identity_map(const SimplicialSet& x);
/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// Empty when f commutes with every face (and degeneracy, if both sides have them);
/// otherwise a description of the first violation.
std::optional<std::string> map_violation(const SimplicialSet& source, const SimplicialSet& target,
                                         const SimplicialMap& f);
void check_map(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f);

bool is_injective(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f);
bool is_bijective(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f);

/// Same counts and identical action tables.
bool identical(const SimplicialSet& a, const SimplicialSet& b);

}  // namespace realcmp
