#include "realcmp/tau_rho.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "realcmp/error.hpp"
#include "realcmp/sset_ops.hpp"

namespace realcmp {

namespace {

/// Chains [l_0] >-> ... >-> [l_k] >-> [m] with l_0 < ... < l_k <= m.
std::vector<std::vector<MonotoneMap>> sd_chains(int m, int k) {
  std::vector<std::vector<MonotoneMap>> level;
  for (int l = 0; l <= m; ++l)
    for (const auto& a : enumerate_hom(l, m, HomClass::injective)) level.push_back({a});
  for (int step = 0; step < k; ++step) {
    std::vector<std::vector<MonotoneMap>> next;
    for (const auto& c : level) {
      const int top = c.front().dom();
      for (int l = 0; l < top; ++l)
        for (const auto& a : enumerate_hom(l, top, HomClass::injective)) {
          std::vector<MonotoneMap> longer{a};
          longer.insert(longer.end(), c.begin(), c.end());
          next.push_back(std::move(longer));
        }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<MonotoneMap> sd_face(int i, const std::vector<MonotoneMap>& c) {
  std::vector<MonotoneMap> out;
  for (std::size_t p = 0; p < c.size(); ++p) {
    if (p == static_cast<std::size_t>(i)) {
      if (p > 0) out.back() = compose(c[p], out.back());
      continue;
    }
    out.push_back(c[p]);
  }
  return out;
}

SimplicialMap compose_maps(const SimplicialMap& g, const SimplicialMap& f) {
  SimplicialMap h;
  for (const auto& comp : f.components) {
    const auto n = h.components.size();
    std::vector<Cell> out;
    out.reserve(comp.size());
    for (Cell c : comp) out.push_back(g.components[n][c]);
    h.components.push_back(std::move(out));
  }
  return h;
}

CosimplicialMap identity_cosimplicial(const CosimplicialObject& c) {
  CosimplicialMap id;
  for (int n = 0; n <= c.cap(); ++n) id.components.push_back(identity_map(c.level(n)));
  return id;
}

ObjectMap truncated_map(const ObjectMap& f, int cap) {
  ObjectMap g;
  for (int n = 0; n <= cap; ++n) {
    SimplicialMap m;
    for (int j = 0; j <= cap; ++j) m.components.push_back(f.components[static_cast<std::size_t>(n)].components[static_cast<std::size_t>(j)]);
    g.components.push_back(std::move(m));
  }
  return g;
}

std::string fraction(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace

MonotoneMap sd_last_vertex(const std::vector<MonotoneMap>& chain) {
  const int k = static_cast<int>(chain.size()) - 1;
  const int m = chain.back().cod();
  std::vector<int> values;
  for (int i = 0; i <= k; ++i) {
    int v = chain[static_cast<std::size_t>(i)].dom();
    for (int p = i; p <= k; ++p) v = chain[static_cast<std::size_t>(p)](v);
    values.push_back(v);
  }
  return MonotoneMap(m, std::move(values));
}

TauValue tau_bar(const SdCell& c) {
  TauValue v{compose(c.x, sd_last_vertex(c.chain)), {}};
  for (const auto& a : c.chain) v.flag.push_back(a.dom());
  return v;
}

Cell TauSemiReport::raw_cell(int k, const SdCell& c) const {
  const auto& level = raw_cells[static_cast<std::size_t>(k)];
  const auto it = std::lower_bound(level.begin(), level.end(), c);
  if (it == level.end() || *it != c) throw ValidationError("tau: unknown subdivided cell");
  return static_cast<Cell>(it - level.begin());
}

Cell TauSemiReport::target_cell(int k, const TauValue& v) const {
  const HomSet hom(k, n);
  const auto flags = enumerate_flags(flag_bound, k);
  const auto f = std::lower_bound(flags.begin(), flags.end(), v.flag);
  return static_cast<Cell>(hom.index(v.simplex) * flags.size() + static_cast<std::size_t>(f - flags.begin()));
}

TauSemiReport tau_semisimplicial(int n, int flag_bound, int cap) {
  if (n < 0 || cap < 0) throw ConfigError("tau: negative dimension or cap");
  if (flag_bound < cap) throw ConfigError("tau: flag bound " + std::to_string(flag_bound) + " below cap " + std::to_string(cap));
  TauSemiReport r;
  r.n = n;
  r.flag_bound = flag_bound;
  r.cap = cap;
  r.raw_cells.resize(static_cast<std::size_t>(cap) + 1);
  for (int k = 0; k <= cap; ++k)
    for (int m = k; m <= cap; ++m) {
      const auto chains = sd_chains(m, k);
      for (const auto& x : enumerate_hom(m, n))
        for (const auto& c : chains) r.raw_cells[static_cast<std::size_t>(k)].push_back({x, c});
    }
  for (auto& level : r.raw_cells) std::sort(level.begin(), level.end());
  r.raw = tabulate<SdCell>(
      cap, r.raw_cells, [](int, int i, const SdCell& c) { return SdCell{c.x, sd_face(i, c.chain)}; }, {});
  CellRelation rel;
  for (int k = 0; k <= cap; ++k)
    for (const auto& c : r.raw_cells[static_cast<std::size_t>(k)]) {
      const int m = c.x.dom();
      for (int i = 0; i <= m + 1 && m < cap; ++i) {
        const auto d = MonotoneMap::coface(m + 1, i);
        for (const auto& y : enumerate_hom(m + 1, n)) {
          if (compose(y, d) != c.x) continue;
          auto pushed = c.chain;
          pushed.back() = compose(d, pushed.back());
          rel.push_back({{k, r.raw_cell(k, c)}, {k, r.raw_cell(k, SdCell{y, std::move(pushed)})}});
        }
      }
    }
  auto q = quotient(r.raw, rel);
  r.domain = std::move(q.value);
  r.projection = std::move(q.projection);
  r.target = product(standard_simplex(n, cap).as_semi(), flag_object(flag_bound, cap));
  r.descends = true;
  constexpr Cell unset = static_cast<Cell>(-1);
  for (int k = 0; k <= cap; ++k) {
    std::vector<Cell> comp(r.domain.size(k), unset);
    const auto& level = r.raw_cells[static_cast<std::size_t>(k)];
    for (Cell c = 0; c < level.size(); ++c) {
      const Cell img = r.target_cell(k, tau_bar(level[c]));
      Cell& slot = comp[r.projection(k, c)];
      if (slot == unset) {
        slot = img;
      } else if (slot != img && r.descends) {
        r.descends = false;
        r.detail = "related cells disagree in degree " + std::to_string(k);
      }
    }
    r.map.components.push_back(std::move(comp));
  }
  if (!r.descends) return r;
  if (auto v = map_violation(r.domain, r.target, r.map)) {
    r.detail = *v;
    return r;
  }
  r.commutes_with_faces = true;
  return r;
}

TauOnCoends tau_on_coends(const SimplicialObject& x, int flag_bound) {
  const int cap = x.cap();
  if (cap < 1 || x.internal_cap() != cap) throw ConfigError("tau: needs equal caps of at least 1");
  if (flag_bound < cap) throw ConfigError("tau: flag bound " + std::to_string(flag_bound) + " below cap " + std::to_string(cap));
  TauOnCoends r;
  r.source_cap = cap - 1;
  r.target_cap = cap;
  r.flag_bound = flag_bound;
  const int sc = r.source_cap;
  const auto t = subdivided_cosimplicial(sc, sc, sc);
  r.subdivided = coend(x.truncated(sc, sc), t.object, IndexShape::delta);
  const auto fc = fat_cosimplicial(cap, cap);
  const auto uc = unravel_cosimplicial(cap, cap, flag_bound);
  r.fat_side = fat_assoc_map(x, fc);
  r.unravel_side = unravel_assoc_map(x, uc, flag_bound);
  for (const auto* a : {&r.fat_side, &r.unravel_side}) {
    const auto rep = make_iso_report("assoc", a->construction.value, a->matrix.value, a->map);
    if (!rep.ok()) throw ValidationError("tau: associativity map fails: " + rep.detail);
  }
  const auto beta_m = induced_map(r.subdivided, r.fat_side.matrix, [&](int n, int j, Cell a, Cell b) {
    return std::tuple{n, a, fc.find(n, j, beta_cell(t.key(n, j, b)))};
  });
  const auto tau_m = induced_map(r.subdivided, r.unravel_side.matrix, [&](int n, int j, Cell a, Cell b) {
    return std::tuple{n, a, uc.find(n, j, tau_cell(t.key(n, j, b)))};
  });
  const auto std_c = standard_cosimplicial(cap, cap);
  const auto ux = unravel(x, flag_bound);
  const auto fx = fat(x);
  const auto pi_m = coend_map(r.unravel_side.construction, r.fat_side.construction, proj_pi(ux, fx),
                              identity_cosimplicial(std_c.object));
  r.well_defined = beta_m.simplicial && tau_m.simplicial && pi_m.simplicial;
  if (!r.well_defined) {
    r.detail = !beta_m.simplicial ? "beta: " + beta_m.detail
               : !tau_m.simplicial ? "tau: " + tau_m.detail
                                   : "pi: " + pi_m.detail;
    return r;
  }
  r.beta = compose_maps(inverse_map(r.fat_side.construction.value, r.fat_side.matrix.value, r.fat_side.map.map),
                        beta_m.map);
  r.tau = compose_maps(
      inverse_map(r.unravel_side.construction.value, r.unravel_side.matrix.value, r.unravel_side.map.map), tau_m.map);
  r.pi = pi_m.map;
  r.pi_tau_is_beta = compose_maps(r.pi, r.tau) == r.beta;
  if (!r.pi_tau_is_beta) r.detail = "pi o tau differs from beta on cells";
  return r;
}

NaturalityReport tau_naturality(const SimplicialObject& x, const SimplicialObject& y, const ObjectMap& f,
                                int flag_bound) {
  if (auto v = object_map_violation(x, y, f)) throw ValidationError("tau naturality: " + *v);
  const auto tx = tau_on_coends(x, flag_bound), ty = tau_on_coends(y, flag_bound);
  NaturalityReport r;
  if (!tx.well_defined || !ty.well_defined) {
    r.detail = "tau not defined: " + tx.detail + ty.detail;
    return r;
  }
  const int sc = tx.source_cap;
  const auto t = subdivided_cosimplicial(sc, sc, sc);
  const auto left = coend_map(tx.subdivided, ty.subdivided, truncated_map(f, sc), identity_cosimplicial(t.object));
  const auto std_c = standard_cosimplicial(x.cap(), x.internal_cap());
  const auto right = coend_map(tx.unravel_side.construction, ty.unravel_side.construction,
                               unravel_map(unravel(x, flag_bound), unravel(y, flag_bound), f),
                               identity_cosimplicial(std_c.object));
  if (!left.simplicial || !right.simplicial) {
    r.detail = "induced map fails: " + left.detail + right.detail;
    return r;
  }
  r.commutes = compose_maps(ty.tau, left.map) == compose_maps(right.map, tx.tau);
  if (!r.commutes) r.detail = "square does not commute";
  return r;
}

PiTauVerdict check_pi_tau(const SimplicialObject& x, int flag_bound, int max_degree) {
  if (max_degree < 0 || max_degree + 2 > x.cap()) throw ConfigError("check_pi_tau: needs max_degree + 2 <= cap");
  const auto on = tau_on_coends(x, flag_bound);
  PiTauVerdict v;
  v.max_degree = max_degree;
  v.flag_bound = flag_bound;
  v.cap = x.cap();
  if (!on.well_defined) {
    v.detail = on.detail;
    return v;
  }
  v.pi_tau_is_beta = on.pi_tau_is_beta;
  const auto& src = on.subdivided.value;
  const auto& tgt = on.fat_side.construction.value;
  const auto pt = compose_maps(on.pi, on.tau);
  v.beta = homology_iso_check(src, tgt, on.beta, max_degree);
  v.pi_tau = homology_iso_check(src, tgt, pt, max_degree);
  v.agreement = induced_maps_agree(src, tgt, pt, on.beta, max_degree);
  std::ostringstream os;
  os << "beta: " << v.beta.detail << "; pi o tau: " << v.pi_tau.detail << "; agreement: " << v.agreement.detail;
  if (!on.pi_tau_is_beta) os << "; " << on.detail;
  v.detail = os.str();
  return v;
}

BarycentricPoint::BarycentricPoint(std::vector<Rational> coordinates) : t(std::move(coordinates)) {
  if (t.empty()) throw ConfigError("barycentric point: no coordinates");
  Rational sum = 0;
  for (const auto& c : t) {
    if (c < 0) throw ConfigError("barycentric point: negative coordinate");
    sum += c;
  }
  if (sum != 1) throw ConfigError("barycentric point: coordinates sum to " + fraction(sum));
}

BarycentricPoint BarycentricPoint::coface(int i) const {
  auto u = t;
  u.insert(u.begin() + i, Rational(0));
  return BarycentricPoint(std::move(u));
}

Rational s_fold(const BarycentricPoint& p, int j) {
  const int n = p.dimension();
  if (j < 0 || j > n) throw ConfigError("s_fold: index out of range");
  Rational sum = 0;
  for (const auto& e : enumerate_hom(j, n, HomClass::injective)) {
    std::vector<char> in(static_cast<std::size_t>(n) + 1, 0);
    for (int p2 = 0; p2 <= j; ++p2) in[static_cast<std::size_t>(e(p2))] = 1;
    Rational lo = 1, hi = 0;
    for (int i = 0; i <= n; ++i) {
      const auto& ti = p.t[static_cast<std::size_t>(i)];
      if (in[static_cast<std::size_t>(i)]) lo = std::min(lo, ti);
      else hi = std::max(hi, ti);
    }
    if (lo > hi) sum += lo - hi;
  }
  return sum * (j + 1);
}

std::vector<Rational> s_fold_all(const BarycentricPoint& p) {
  std::vector<Rational> s;
  for (int j = 0; j <= p.dimension(); ++j) s.push_back(s_fold(p, j));
  return s;
}

Rational s_fold_sorted(const BarycentricPoint& p, int j) {
  auto sorted = p.t;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  sorted.emplace_back(0);
  return (sorted[static_cast<std::size_t>(j)] - sorted[static_cast<std::size_t>(j) + 1]) * (j + 1);
}

std::vector<Rational> RhoPoint::ambient(int n) const {
  std::vector<Rational> a(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t p = 0; p < vertices.size(); ++p) a[static_cast<std::size_t>(vertices[p])] += coordinates[p];
  return a;
}

namespace {

/// (simplex, 0 < ... < d, s) restricted to the support of s; simplex[p] is the vertex of p.
RhoPoint normalize(const std::vector<int>& simplex, const std::vector<Rational>& s) {
  RhoPoint r;
  for (std::size_t p = 0; p < s.size(); ++p)
    if (s[p] != 0) {
      r.vertices.push_back(simplex[p]);
      r.flag.push_back(static_cast<int>(p));
      r.coordinates.push_back(s[p]);
    }
  return r;
}

}  // namespace

RhoPoint rho_direct(const BarycentricPoint& t) {
  std::vector<int> simplex;
  for (int p = 0; p <= t.dimension(); ++p) simplex.push_back(p);
  return normalize(simplex, s_fold_all(t));
}

RhoPoint rho_through_face(const BarycentricPoint& preimage, int face) {
  std::vector<int> simplex;
  for (int p = 0; p <= preimage.dimension(); ++p) simplex.push_back(p < face ? p : p + 1);
  return normalize(simplex, s_fold_all(preimage));
}

std::optional<RhoWitness> rho_face_counterexample(int n, int grid_resolution) {
  if (n < 1 || grid_resolution < 1) throw ConfigError("rho search: needs n >= 1 and a positive resolution");
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 0);
  a.back() = grid_resolution;
  for (;;) {
    std::vector<Rational> t;
    for (int v : a) t.emplace_back(v, grid_resolution);
    for (int i = 0; i <= n; ++i) {
      if (a[static_cast<std::size_t>(i)] != 0) continue;
      auto pre = t;
      pre.erase(pre.begin() + i);
      RhoWitness w;
      w.n = n;
      w.face = i;
      w.t = t;
      w.lhs = rho_direct(BarycentricPoint(t));
      w.rhs = rho_through_face(BarycentricPoint(pre), i);
      const auto l = w.lhs.ambient(n), r = w.rhs.ambient(n);
      w.total = 0;
      for (std::size_t p = 0; p < l.size(); ++p) {
        w.discrepancy.push_back(l[p] - r[p]);
        w.total += abs(l[p] - r[p]);
      }
      w.flags_differ = w.lhs.flag != w.rhs.flag;
      if (w.total > 0) return w;
    }
    // Next composition of grid_resolution into n + 1 parts, lexicographically.
    int p = n - 1, tail = a[static_cast<std::size_t>(n)];
    while (p >= 0 && tail == 0) tail += a[static_cast<std::size_t>(p--)];
    if (p < 0) return std::nullopt;
    ++a[static_cast<std::size_t>(p)];
    int rest = grid_resolution;
    for (int q = 0; q <= p; ++q) rest -= a[static_cast<std::size_t>(q)];
    for (int q = p + 1; q < n; ++q) a[static_cast<std::size_t>(q)] = 0;
    a[static_cast<std::size_t>(n)] = rest;
  }
}

bool verify_rho_witness(const RhoWitness& w) {
  const int n = w.n;
  if (w.t.size() != static_cast<std::size_t>(n) + 1 || w.t[static_cast<std::size_t>(w.face)] != 0) return false;
  const BarycentricPoint t(w.t);
  auto pre_t = w.t;
  pre_t.erase(pre_t.begin() + w.face);
  const BarycentricPoint pre(pre_t);
  std::vector<Rational> lhs, rhs;
  for (int j = 0; j <= n; ++j) lhs.push_back(s_fold_sorted(t, j));
  for (int j = 0; j < n; ++j) rhs.push_back(s_fold_sorted(pre, j));
  rhs.insert(rhs.begin() + w.face, Rational(0));
  Rational total = 0;
  for (int p = 0; p <= n; ++p) {
    const auto d = lhs[static_cast<std::size_t>(p)] - rhs[static_cast<std::size_t>(p)];
    if (d != w.discrepancy[static_cast<std::size_t>(p)]) return false;
    total += abs(d);
  }
  return total == w.total && total > 0;
}

nlohmann::json to_json(const RhoWitness& w) {
  auto fractions = [](const std::vector<Rational>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& x : v) a.push_back(fraction(x));
    return a;
  };
  auto point = [&](const RhoPoint& p) {
    return nlohmann::json{{"vertices", p.vertices}, {"flag", p.flag}, {"coordinates", fractions(p.coordinates)},
                          {"ambient", fractions(p.ambient(w.n))}};
  };
  return nlohmann::json{
      {"n", w.n},
      {"face", w.face},
      {"t", fractions(w.t)},
      {"lhs", point(w.lhs)},
      {"rhs", point(w.rhs)},
      {"discrepancy", fractions(w.discrepancy)},
      {"total", fraction(w.total)},
      {"flags_differ", w.flags_differ},
      {"reading",
       "s_j = (j+1) sum over (j+1)-subsets E of max(0, min over E - max over the complement), "
       "max over an empty complement = 0; image coordinates (s_0, ..., s_n) with flag 0 < 1 < ... < n"}};
}

}  // namespace realcmp
