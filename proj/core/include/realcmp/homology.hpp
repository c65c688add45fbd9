#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "realcmp/simplicial_set.hpp"

namespace realcmp {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& entries);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free elimination.
Integer determinant(const IntegerMatrix& m);

struct SnfResult {
  std::vector<Integer> diagonal;  // nonzero invariant factors, each dividing the next
  std::size_t rank = 0;
  IntegerMatrix d, u, v;          // m = u * d * v when transforms were requested
};
SnfResult smith_normal_form(const IntegerMatrix& m, bool transforms = true);
/// Reconstruction, diagonal shape, divisibility and unimodular transforms.
bool verify_snf(const IntegerMatrix& m, const SnfResult& r);

/// Column-sparse integer matrix.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> columns;  // sorted by row
};
/// Rank and the invariant factors greater than one.
struct SparseInvariants {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};
SparseInvariants sparse_invariants(const SparseMatrix& m);
IntegerMatrix to_dense(const SparseMatrix& m);

/// Normalized chains: nondegenerate cells, or every cell of a semi-simplicial set.
struct ChainComplex {
  std::vector<std::vector<Cell>> basis;              // [d] -> cells
  std::vector<std::vector<std::int64_t>> position;   // [d][cell] -> basis index or -1
  std::vector<SparseMatrix> boundary;                // [d] : C_d -> C_{d-1}; [0] is 0 x |C_0|
  int top() const { return static_cast<int>(basis.size()) - 1; }
  std::size_t rank(int d) const { return basis[static_cast<std::size_t>(d)].size(); }
};
ChainComplex chain_complex(const SimplicialSet& x);
/// d o d = 0 in every degree.
bool boundary_squares_to_zero(const ChainComplex& c);

struct DegreeHomology {
  std::size_t betti = 0;
  std::vector<Integer> torsion;
  friend bool operator==(const DegreeHomology&, const DegreeHomology&) = default;
};
struct HomologySignature {
  std::vector<DegreeHomology> degrees;
  friend bool operator==(const HomologySignature&, const HomologySignature&) = default;
  std::string to_string() const;
  bool torsion_free() const;
};
/// H_d for d <= max_degree (default and upper bound: cap - 1).
HomologySignature homology(const SimplicialSet& x, int max_degree = -1);
HomologySignature homology(const ChainComplex& c, int max_degree);
std::size_t pi0(const SimplicialSet& x);

/// The normalized chain map of f in degrees 0 .. top.
std::vector<SparseMatrix> chain_map(const ChainComplex& a, const ChainComplex& b, const SimplicialSet& source,
                                    const SimplicialMap& f, int top);
/// The algebraic mapping cone C_d = A_{d-1} + B_d of a chain map, degrees 0 .. top.
ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const std::vector<SparseMatrix>& f, int top);

struct IsoVerdict {
  bool iso = false;
  bool pi0_bijective = false;
  int max_degree = 0;
  std::optional<int> cone_failure_degree;   // first d with H_d(cone) != 0
  std::optional<int> first_failing_degree;  // first d where f_* is not an isomorphism
  HomologySignature source, target;
  std::string detail;
};
/// f_* is an isomorphism on H_d for d <= max_degree, certified by acyclicity of the
/// mapping cone through max_degree + 1, together with a bijection on components.
IsoVerdict homology_iso_check(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f,
                              int max_degree);

struct AgreementVerdict {
  bool agree = false;
  bool conclusive = false;  // H(target) torsion-free through max_degree
  std::string detail;
};
/// f_* = g_* on H_d for d <= max_degree, via the cone of f - g.
AgreementVerdict induced_maps_agree(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f,
                                    const SimplicialMap& g, int max_degree);

}  // namespace realcmp
