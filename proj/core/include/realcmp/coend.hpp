#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "realcmp/constructions.hpp"
#include "realcmp/cosimplicial.hpp"

namespace realcmp {

/// Index category of the coend: all monotone maps, or injections only.
enum class IndexShape { delta, delta_plus };

/// The coend of X (external) against C, computed as the quotient of the coproduct
/// over n of X_n x C^n by (u^* x, c) ~ (x, u_* c) for the generating u.
struct CoendResult {
  SimplicialSet value;
  SimplicialMap projection;                             // coproduct -> value
  std::vector<std::vector<std::size_t>> offsets;        // [n][j]
  std::vector<std::vector<std::size_t>> left_sizes;     // [n][j] = |X_{n,j}|
  std::vector<std::vector<std::size_t>> right_sizes;    // [n][j] = |C^n_j|

  int cap() const { return static_cast<int>(offsets.size()) - 1; }
  /// The class of (x, c) with x in X_{n,j} and c in C^n_j.
  Cell cell(int n, int j, Cell x, Cell c) const {
    const auto un = static_cast<std::size_t>(n), uj = static_cast<std::size_t>(j);
    return projection(j, static_cast<Cell>(offsets[un][uj] + x * right_sizes[un][uj] + c));
  }
};

CoendResult coend(const SimplicialObject& x, const CosimplicialObject& c, IndexShape shape);

/// Representative (n, x, c) of a coproduct cell sent to the target.
using CoendCellFn = std::function<std::tuple<int, Cell, Cell>(int n, int j, Cell x, Cell c)>;

struct InducedMap {
  SimplicialMap map;
  bool well_defined = false;
  bool simplicial = false;
  std::string detail;
};
/// The map of coends given on representatives; checks that it respects the relation.
InducedMap induced_map(const CoendResult& source, const CoendResult& target, const CoendCellFn& image);
/// [x, c] -> [f x, g c].
InducedMap coend_map(const CoendResult& source, const CoendResult& target, const ObjectMap& f,
                     const CosimplicialMap& g);

struct IsoReport {
  std::string name;
  std::vector<std::size_t> source_counts;
  std::vector<std::size_t> target_counts;
  bool well_defined = false;
  bool simplicial = false;
  bool bijective = false;
  std::string detail;
  bool ok() const { return well_defined && simplicial && bijective; }
};
IsoReport make_iso_report(std::string name, const SimplicialSet& source, const SimplicialSet& target,
                          const InducedMap& m);

/// diag X -> coend of X against the standard simplices, x -> [x, id].
IsoReport diagonal_coend_check(const SimplicialObject& x);
/// Coend over Delta_+ of a semi-simplicial X against the simplices, compared with the
/// coend over Delta of its left Kan extension.
IsoReport kan_coend_check(const SimplicialObject& semi);
/// The coend of X^kind against the simplices compared with the coend of X against the
/// matching cosimplicial object. kind is fat, unravel or simp; bound is N or R.
IsoReport assoc_check(const SimplicialObject& x, const std::string& kind, int bound);

/// [(key, y), c] -> [y, key acting on c], from the construction side to the matrix side.
struct AssocMap {
  CoendResult construction;  // coend of X^kind against the simplices
  CoendResult matrix;        // coend of X against the matching cosimplicial object
  InducedMap map;
};
AssocMap fat_assoc_map(const SimplicialObject& x, const FatCosimplicial& matrix);
/// matrix must be built with the same flag bound.
AssocMap unravel_assoc_map(const SimplicialObject& x, const UnravelCosimplicial& matrix, int flag_bound);
/// Inverse of a bijective simplicial map; throws ValidationError otherwise.
SimplicialMap inverse_map(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f);

}  // namespace realcmp
