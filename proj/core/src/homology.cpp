#include "realcmp/homology.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "realcmp/error.hpp"
#include "realcmp/union_find.hpp"

namespace realcmp {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, const std::vector<long long>& entries)
    : rows_(rows), cols_(cols) {
  if (entries.size() != rows * cols) throw ValidationError("IntegerMatrix: entry count != rows * cols");
  data_.assign(entries.begin(), entries.end());
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw CompositionMismatch("IntegerMatrix: inner dimensions differ");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Integer determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw ValidationError("determinant: matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// In-place Smith reduction of d; u and v track m = u d v when non-null.
void reduce(IntegerMatrix& d, IntegerMatrix* u, IntegerMatrix* v) {
  const std::size_t rows = d.rows(), cols = d.cols();
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(d(i, c), d(j, c));
    if (u)
      for (std::size_t r = 0; r < u->rows(); ++r) std::swap((*u)(r, i), (*u)(r, j));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(d(r, i), d(r, j));
    if (v)
      for (std::size_t c = 0; c < v->cols(); ++c) std::swap((*v)(i, c), (*v)(j, c));
  };
  // row_i += k row_j
  auto add_row = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t c = 0; c < cols; ++c)
      if (!d(j, c).is_zero()) d(i, c) += k * d(j, c);
    if (u)
      for (std::size_t r = 0; r < u->rows(); ++r) (*u)(r, j) -= k * (*u)(r, i);
  };
  // col_i += k col_j
  auto add_col = [&](std::size_t i, std::size_t j, const Integer& k) {
    for (std::size_t r = 0; r < rows; ++r)
      if (!d(r, j).is_zero()) d(r, i) += k * d(r, j);
    if (v)
      for (std::size_t c = 0; c < v->cols(); ++c) (*v)(j, c) -= k * (*v)(i, c);
  };
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (!d(i, j).is_zero() && (pr == rows || abs_of(d(i, j)) < abs_of(d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (!d(i, t).is_zero()) {
          add_row(i, t, -Integer(d(i, t) / d(t, t)));
          if (!d(i, t).is_zero()) clean = false;
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (!d(t, j).is_zero()) {
          add_col(j, t, -Integer(d(t, j) / d(t, t)));
          if (!d(t, j).is_zero()) clean = false;
        }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (!d(i, t).is_zero() && abs_of(d(i, t)) < abs_of(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!d(t, j).is_zero() && abs_of(d(t, j)) < abs_of(d(bi, bj))) bi = t, bj = j;
        swap_rows(t, bi);
        swap_cols(t, bj);
        continue;
      }
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (Integer(d(i, j) % d(t, t)) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      add_row(t, bad, 1);
    }
    if (d(t, t) < 0) {
      for (std::size_t c = 0; c < cols; ++c) d(t, c) = -d(t, c);
      if (u)
        for (std::size_t r = 0; r < u->rows(); ++r) (*u)(r, t) = -(*u)(r, t);
    }
  }
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m, bool transforms) {
  SnfResult r;
  r.d = m;
  if (transforms) {
    r.u = IntegerMatrix::identity(m.rows());
    r.v = IntegerMatrix::identity(m.cols());
  }
  reduce(r.d, transforms ? &r.u : nullptr, transforms ? &r.v : nullptr);
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()) && !r.d(t, t).is_zero(); ++t) r.diagonal.push_back(r.d(t, t));
  r.rank = r.diagonal.size();
  return r;
}

bool verify_snf(const IntegerMatrix& m, const SnfResult& r) {
  const auto& d = r.d;
  if (d.rows() != m.rows() || d.cols() != m.cols()) return false;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && !d(i, j).is_zero()) return false;
  for (std::size_t t = 0; t < r.diagonal.size(); ++t) {
    if (r.diagonal[t] <= 0 || d(t, t) != r.diagonal[t]) return false;
    if (t + 1 < r.diagonal.size() && Integer(r.diagonal[t + 1] % r.diagonal[t]) != 0) return false;
  }
  for (std::size_t t = r.diagonal.size(); t < std::min(d.rows(), d.cols()); ++t)
    if (!d(t, t).is_zero()) return false;
  if (r.u.rows() != m.rows() || r.v.rows() != m.cols()) return false;
  if (abs_of(determinant(r.u)) != 1 || abs_of(determinant(r.v)) != 1) return false;
  return r.u * d * r.v == m;
}

IntegerMatrix to_dense(const SparseMatrix& m) {
  IntegerMatrix d(m.rows, m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, x] : m.columns[c]) d(r, c) = x;
  return d;
}

namespace {

struct Overflow {};

bool is_unit(std::int64_t x) { return x == 1 || x == -1; }
bool is_unit(const Integer& x) { return x == 1 || x == -1; }
bool is_zero(std::int64_t x) { return x == 0; }
bool is_zero(const Integer& x) { return x.is_zero(); }

/// a - k * b
std::int64_t sub_mul(std::int64_t a, std::int64_t k, std::int64_t b) {
  std::int64_t p, out;
  if (__builtin_mul_overflow(k, b, &p) || __builtin_sub_overflow(a, p, &out)) throw Overflow{};
  return out;
}
Integer sub_mul(const Integer& a, const Integer& k, const Integer& b) { return a - k * b; }
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p)) throw Overflow{};
  return p;
}
Integer mul(const Integer& a, const Integer& b) { return a * b; }

template <class T>
SparseInvariants eliminate(const SparseMatrix& m) {
  using Row = std::vector<std::pair<std::uint32_t, T>>;
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<std::uint32_t>> col_rows(m.cols);
  for (std::size_t c = 0; c < m.cols; ++c)
    for (const auto& [r, x] : m.columns[c]) {
      rows[r].emplace_back(static_cast<std::uint32_t>(c), T(x));
      col_rows[c].push_back(r);
    }
  std::vector<char> dead(m.rows, 0);
  SparseInvariants out;
  auto coefficient = [&](const Row& row, std::uint32_t c) -> const T* {
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, std::uint32_t k) { return e.first < k; });
    return it != row.end() && it->first == c ? &it->second : nullptr;
  };
  Row merged;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order;
    for (std::uint32_t r = 0; r < m.rows; ++r)
      if (!dead[r] && !rows[r].empty()) order.push_back(r);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return rows[a].size() < rows[b].size(); });
    for (auto r : order) {
      if (dead[r] || rows[r].empty()) continue;
      std::uint32_t pc = 0;
      std::size_t best = SIZE_MAX;
      T pv{};
      for (const auto& [c, x] : rows[r])
        if (is_unit(x) && col_rows[c].size() < best) {
          best = col_rows[c].size();
          pc = c;
          pv = x;
        }
      if (best == SIZE_MAX) continue;
      const Row& pivot = rows[r];
      for (auto r2 : col_rows[pc]) {
        if (r2 == r || dead[r2]) continue;
        const T* a = coefficient(rows[r2], pc);
        if (!a) continue;
        const T k = mul(*a, pv);
        merged.clear();
        auto& target = rows[r2];
        std::size_t i = 0, j = 0;
        while (i < target.size() || j < pivot.size()) {
          if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
            merged.push_back(std::move(target[i++]));
          } else if (i == target.size() || pivot[j].first < target[i].first) {
            T val = sub_mul(T(0), k, pivot[j].second);
            col_rows[pivot[j].first].push_back(r2);
            merged.emplace_back(pivot[j++].first, std::move(val));
          } else {
            T val = sub_mul(target[i].second, k, pivot[j].second);
            if (!is_zero(val)) merged.emplace_back(target[i].first, std::move(val));
            ++i;
            ++j;
          }
        }
        std::swap(target, merged);
      }
      dead[r] = 1;
      col_rows[pc].clear();
      ++out.rank;
      progress = true;
    }
  }
  // Dense SNF of what remains.
  std::vector<std::uint32_t> live_rows;
  std::vector<std::int64_t> col_index(m.cols, -1);
  std::size_t ncols = 0;
  for (std::uint32_t r = 0; r < m.rows; ++r)
    if (!dead[r] && !rows[r].empty()) {
      live_rows.push_back(r);
      for (const auto& e : rows[r])
        if (col_index[e.first] < 0) col_index[e.first] = static_cast<std::int64_t>(ncols++);
    }
  if (live_rows.empty()) return out;
  IntegerMatrix rest(live_rows.size(), ncols);
  for (std::size_t i = 0; i < live_rows.size(); ++i)
    for (const auto& [c, x] : rows[live_rows[i]]) rest(i, static_cast<std::size_t>(col_index[c])) = Integer(x);
  const auto snf = smith_normal_form(rest, false);
  out.rank += snf.rank;
  for (const auto& x : snf.diagonal)
    if (x > 1) out.torsion.push_back(x);
  return out;
}

}  // namespace

SparseInvariants sparse_invariants(const SparseMatrix& m) {
  try {
    return eliminate<std::int64_t>(m);
  } catch (const Overflow&) {
    return eliminate<Integer>(m);
  }
}

ChainComplex chain_complex(const SimplicialSet& x) {
  ChainComplex c;
  const int cap = x.cap();
  for (int d = 0; d <= cap; ++d) {
    std::vector<Cell> basis;
    std::vector<std::int64_t> pos(x.size(d), -1);
    for (Cell a = 0; a < x.size(d); ++a)
      if (x.is_semi() || !x.is_degenerate(d, a)) {
        pos[a] = static_cast<std::int64_t>(basis.size());
        basis.push_back(a);
      }
    c.basis.push_back(std::move(basis));
    c.position.push_back(std::move(pos));
  }
  c.boundary.push_back({0, c.basis[0].size(), std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>(c.basis[0].size())});
  for (int d = 1; d <= cap; ++d) {
    SparseMatrix m{c.rank(d - 1), c.rank(d), {}};
    for (Cell a : c.basis[static_cast<std::size_t>(d)]) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> col;
      for (int i = 0; i <= d; ++i) {
        const auto p = c.position[static_cast<std::size_t>(d) - 1][x.face(d, i, a)];
        if (p >= 0) col.emplace_back(static_cast<std::uint32_t>(p), i % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      std::vector<std::pair<std::uint32_t, std::int64_t>> merged;
      for (const auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      m.columns.push_back(std::move(merged));
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

bool boundary_squares_to_zero(const ChainComplex& c) {
  for (int d = 2; d <= c.top(); ++d) {
    const auto& outer = c.boundary[static_cast<std::size_t>(d) - 1];
    for (const auto& col : c.boundary[static_cast<std::size_t>(d)].columns) {
      std::vector<std::int64_t> acc(outer.rows, 0);
      for (const auto& [r, x] : col)
        for (const auto& [r2, y] : outer.columns[r]) acc[r2] += x * y;
      if (std::any_of(acc.begin(), acc.end(), [](std::int64_t v) { return v != 0; })) return false;
    }
  }
  return true;
}

std::string HomologySignature::to_string() const {
  std::ostringstream os;
  for (std::size_t d = 0; d < degrees.size(); ++d) {
    if (d) os << ", ";
    os << "H" << d << "=";
    const auto& h = degrees[d];
    bool first = true;
    if (h.betti > 0 || h.torsion.empty()) {
      os << (h.betti == 0 ? "0" : h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti));
      first = false;
    }
    for (const auto& t : h.torsion) {
      os << (first ? "" : "+") << "Z/" << t;
      first = false;
    }
  }
  return os.str();
}

bool HomologySignature::torsion_free() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const DegreeHomology& h) { return h.torsion.empty(); });
}

HomologySignature homology(const ChainComplex& c, int max_degree) {
  if (max_degree < 0 || max_degree + 1 > c.top()) throw ConfigError("homology: degree beyond the truncation");
  std::vector<SparseInvariants> inv(static_cast<std::size_t>(max_degree) + 2);
  for (int d = 1; d <= max_degree + 1; ++d) inv[static_cast<std::size_t>(d)] = sparse_invariants(c.boundary[static_cast<std::size_t>(d)]);
  HomologySignature s;
  for (int d = 0; d <= max_degree; ++d) {
    DegreeHomology h;
    h.betti = c.rank(d) - inv[static_cast<std::size_t>(d)].rank - inv[static_cast<std::size_t>(d) + 1].rank;
    h.torsion = inv[static_cast<std::size_t>(d) + 1].torsion;
    s.degrees.push_back(std::move(h));
  }
  return s;
}

HomologySignature homology(const SimplicialSet& x, int max_degree) {
  if (max_degree < 0) max_degree = x.cap() - 1;
  if (max_degree > x.cap() - 1) throw ConfigError("homology: max degree must be at most cap - 1");
  return homology(chain_complex(x), max_degree);
}

namespace {

std::vector<std::size_t> component_labels(const SimplicialSet& x, std::size_t* count) {
  UnionFind uf(x.size(0));
  if (x.cap() >= 1)
    for (Cell e = 0; e < x.size(1); ++e) uf.unite(x.face(1, 0, e), x.face(1, 1, e));
  return uf.canonical_labels(count);
}

}  // namespace

std::size_t pi0(const SimplicialSet& x) {
  std::size_t k = 0;
  component_labels(x, &k);
  return k;
}

std::vector<SparseMatrix> chain_map(const ChainComplex& a, const ChainComplex& b, const SimplicialSet&,
                                    const SimplicialMap& f, int top) {
  std::vector<SparseMatrix> out;
  for (int d = 0; d <= top; ++d) {
    SparseMatrix m{b.rank(d), a.rank(d), {}};
    for (Cell c : a.basis[static_cast<std::size_t>(d)]) {
      const auto p = b.position[static_cast<std::size_t>(d)][f(d, c)];
      if (p >= 0) m.columns.push_back({{static_cast<std::uint32_t>(p), 1}});
      else m.columns.emplace_back();
    }
    out.push_back(std::move(m));
  }
  return out;
}

ChainComplex mapping_cone(const ChainComplex& a, const ChainComplex& b, const std::vector<SparseMatrix>& f, int top) {
  if (top > b.top() || top - 1 > a.top() || static_cast<int>(f.size()) < top)
    throw ConfigError("mapping cone: complexes are truncated below the requested degree");
  ChainComplex c;
  auto arank = [&](int d) { return d < 0 ? std::size_t{0} : a.rank(d); };
  for (int d = 0; d <= top; ++d) {
    std::vector<Cell> basis(arank(d - 1) + b.rank(d));
    std::iota(basis.begin(), basis.end(), Cell{0});
    c.basis.push_back(std::move(basis));
    c.position.emplace_back();
  }
  c.boundary.push_back({0, c.rank(0), std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>>(c.rank(0))});
  for (int d = 1; d <= top; ++d) {
    SparseMatrix m{c.rank(d - 1), c.rank(d), {}};
    const auto shift = static_cast<std::uint32_t>(arank(d - 2));
    for (std::size_t k = 0; k < arank(d - 1); ++k) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> col;
      if (d >= 2)
        for (const auto& [r, x] : a.boundary[static_cast<std::size_t>(d) - 1].columns[k]) col.emplace_back(r, -x);
      for (const auto& [r, x] : f[static_cast<std::size_t>(d) - 1].columns[k]) col.emplace_back(shift + r, x);
      m.columns.push_back(std::move(col));
    }
    for (const auto& bc : b.boundary[static_cast<std::size_t>(d)].columns) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> col;
      for (const auto& [r, x] : bc) col.emplace_back(shift + r, x);
      m.columns.push_back(std::move(col));
    }
    c.boundary.push_back(std::move(m));
  }
  return c;
}

namespace {

SimplicialSet restricted(const SimplicialSet& x, int cap) { return x.cap() > cap ? x.truncated(cap) : x; }

}  // namespace

IsoVerdict homology_iso_check(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f,
                              int max_degree) {
  if (auto v = map_violation(source, restricted(target, source.cap()), f))
    throw ValidationError("homology_iso_check: " + *v);
  if (max_degree < 0 || max_degree + 2 > target.cap() || max_degree + 1 > source.cap())
    throw ConfigError("homology_iso_check: max degree needs max_degree + 2 <= cap");
  IsoVerdict v;
  v.max_degree = max_degree;
  const auto a = chain_complex(source), b = chain_complex(target);
  v.source = homology(a, max_degree);
  v.target = homology(b, max_degree);
  std::size_t ka = 0, kb = 0;
  const auto la = component_labels(source, &ka), lb = component_labels(target, &kb);
  std::vector<std::int64_t> image(ka, -1);
  std::vector<char> hit(kb, 0);
  v.pi0_bijective = ka == kb;
  for (Cell c = 0; c < source.size(0) && v.pi0_bijective; ++c) {
    auto& slot = image[la[c]];
    const auto t = static_cast<std::int64_t>(lb[f(0, c)]);
    if (slot < 0) {
      if (hit[static_cast<std::size_t>(t)]) v.pi0_bijective = false;
      slot = t;
      hit[static_cast<std::size_t>(t)] = 1;
    }
  }
  const int top = max_degree + 2;
  const auto cone = mapping_cone(a, b, chain_map(a, b, source, f, top - 1), top);
  const auto hc = homology(cone, max_degree + 1);
  for (int d = 0; d <= max_degree + 1; ++d) {
    const auto& h = hc.degrees[static_cast<std::size_t>(d)];
    if (h.betti != 0 || !h.torsion.empty()) {
      v.cone_failure_degree = d;
      break;
    }
  }
  if (v.cone_failure_degree) {
    const int d = *v.cone_failure_degree;
    if (d >= 1 && v.source.degrees[static_cast<std::size_t>(d) - 1] != v.target.degrees[static_cast<std::size_t>(d) - 1])
      v.first_failing_degree = d - 1;
    else if (d <= max_degree)
      v.first_failing_degree = d;
  }
  v.iso = v.pi0_bijective && !v.first_failing_degree;
  std::ostringstream os;
  os << "source " << v.source.to_string() << "; target " << v.target.to_string();
  if (v.cone_failure_degree) os << "; cone homology first nonzero in degree " << *v.cone_failure_degree;
  if (!v.pi0_bijective) os << "; components differ";
  v.detail = os.str();
  return v;
}

AgreementVerdict induced_maps_agree(const SimplicialSet& source, const SimplicialSet& target, const SimplicialMap& f,
                                    const SimplicialMap& g, int max_degree) {
  const auto low = restricted(target, source.cap());
  if (auto v = map_violation(source, low, f)) throw ValidationError("induced_maps_agree: " + *v);
  if (auto v = map_violation(source, low, g)) throw ValidationError("induced_maps_agree: " + *v);
  if (max_degree < 0 || max_degree + 1 > target.cap() || max_degree + 1 > source.cap())
    throw ConfigError("induced_maps_agree: max degree needs max_degree + 1 <= cap");
  AgreementVerdict v;
  const auto a = chain_complex(source), b = chain_complex(target);
  const auto ha = homology(a, max_degree), hb = homology(b, max_degree);
  v.conclusive = hb.torsion_free();
  const auto fm = chain_map(a, b, source, f, max_degree), gm = chain_map(a, b, source, g, max_degree);
  std::vector<SparseMatrix> diff;
  for (std::size_t d = 0; d < fm.size(); ++d) {
    SparseMatrix m{fm[d].rows, fm[d].cols, {}};
    for (std::size_t c = 0; c < fm[d].cols; ++c) {
      std::vector<std::pair<std::uint32_t, std::int64_t>> col = fm[d].columns[c];
      for (const auto& [r, x] : gm[d].columns[c]) col.emplace_back(r, -x);
      std::sort(col.begin(), col.end());
      std::vector<std::pair<std::uint32_t, std::int64_t>> merged;
      for (const auto& e : col) {
        if (!merged.empty() && merged.back().first == e.first) merged.back().second += e.second;
        else merged.push_back(e);
      }
      std::erase_if(merged, [](const auto& e) { return e.second == 0; });
      m.columns.push_back(std::move(merged));
    }
    diff.push_back(std::move(m));
  }
  const auto cone = mapping_cone(a, b, diff, max_degree + 1);
  const auto hc = homology(cone, max_degree);
  v.agree = true;
  for (int d = 0; d <= max_degree && v.agree; ++d) {
    const std::size_t expect =
        hb.degrees[static_cast<std::size_t>(d)].betti + (d >= 1 ? ha.degrees[static_cast<std::size_t>(d) - 1].betti : 0);
    if (hc.degrees[static_cast<std::size_t>(d)].betti != expect) {
      v.agree = false;
      v.detail = "induced maps differ rationally in degree <= " + std::to_string(d);
    }
  }
  if (v.agree) v.detail = "f - g vanishes rationally through degree " + std::to_string(max_degree);
  if (!v.conclusive) v.detail += "; target homology has torsion";
  return v;
}

}  // namespace realcmp
