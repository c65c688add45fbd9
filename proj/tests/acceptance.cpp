// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any line fails.
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "realcmp/builtins.hpp"
#include "realcmp/coend.hpp"
#include "realcmp/cosimplicial.hpp"
#include "realcmp/homology.hpp"
#include "realcmp/reedy.hpp"
#include "realcmp/sset_ops.hpp"
#include "realcmp/tau_rho.hpp"

using namespace realcmp;

namespace {

// Pinned limits.
constexpr int kD = 4;
constexpr int kIsoDegree = kD - 2;
constexpr int kSmallCap = 3;
constexpr int kFiltrationDegree = 4;
constexpr int kRhoGrid = 6;
constexpr double kExactSeconds = 60.0;
constexpr double kHomologySuiteSeconds = 300.0;
constexpr double kRhoSeconds = 120.0;

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << "first failure: " << what;
      pass = false;
    }
  }
};

int failures = 0;
double homology_suite_seconds = 0;

double criterion(const std::string& id, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && s > limit) o.require(false, "runtime " + std::to_string(s) + " s over " + std::to_string(limit));
  std::printf("%s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id.c_str(), s, o.note.str().empty() ? "" : " ",
              o.note.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
  return s;
}

ObjectMap to_point(const SimplicialObject& x) {
  ObjectMap f;
  for (int n = 0; n <= x.cap(); ++n) {
    SimplicialMap m;
    for (int j = 0; j <= x.internal_cap(); ++j) m.components.emplace_back(x.level(n).size(j), Cell{0});
    f.components.push_back(std::move(m));
  }
  return f;
}

const char* const kZigzagSet[] = {"point", "nerve1", "nerve_or", "s2"};

// Coordinate j of the folding map evaluated straight from the subset sum, by bitmask.
Rational fold_by_subsets(const std::vector<Rational>& t, int j) {
  const int n = static_cast<int>(t.size()) - 1;
  Rational sum = 0;
  for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask) {
    if (std::popcount(mask) != j + 1) continue;
    std::optional<Rational> lo, hi;
    for (int i = 0; i <= n; ++i) {
      const auto& v = t[static_cast<std::size_t>(i)];
      if (mask >> i & 1u) lo = lo ? std::min(*lo, v) : v;
      else hi = hi ? std::max(*hi, v) : v;
    }
    const Rational d = *lo - (hi ? *hi : Rational(0));
    if (d > 0) sum += d;
  }
  return sum * (j + 1);
}

}  // namespace

int main() {
  // 1a
  criterion("1a kan-coend", kExactSeconds, [](Outcome& o) {
    for (int cap = 0; cap <= kSmallCap; ++cap) {
      const SimplicialSet inputs[] = {point(cap), flag_object(2, cap), standard_simplex(2, cap).as_semi()};
      const char* names[] = {"point", "flag_object(2)", "face-restricted simplex2"};
      for (int k = 0; k < 3; ++k) {
        const auto r = kan_coend_check(discrete_object(inputs[k], cap).restrict_to_faces());
        o.require(r.ok(), std::string(names[k]) + " cap " + std::to_string(cap) + ": " + r.detail);
      }
    }
  });

  // 1b
  criterion("1b assoc", kExactSeconds, [](Outcome& o) {
    for (int cap = 0; cap <= kSmallCap; ++cap)
      for (const auto* name : {"point", "nerve1", "nerve_or"}) {
        const auto x = builtin_object(name, cap);
        const std::pair<const char*, int> kinds[] = {{"fat", 0}, {"unravel", 3}, {"simp", std::min(cap, 2)}};
        for (const auto& [kind, bound] : kinds) {
          const auto r = assoc_check(x, kind, bound);
          o.require(r.ok(), std::string(name) + " " + kind + " cap " + std::to_string(cap) + ": " + r.detail);
        }
      }
  });

  // 1c
  criterion("1c nerve-compat", kExactSeconds, [](Outcome& o) {
    const std::pair<const char*, FiniteCategory> cats[] = {
        {"terminal", terminal_category()}, {"[1]", poset_category(1)}, {"OR", or_category()}};
    for (const auto& [name, c] : cats)
      for (int cap = 0; cap <= kSmallCap; ++cap) {
        const auto f = nerve_compat_fat(c, cap);
        o.require(f.ok(), std::string(name) + " fat cap " + std::to_string(cap) + ": " + f.detail);
        for (int n = 0; n <= 3; ++n) {
          const auto u = nerve_compat_unravel(c, n, cap);
          o.require(u.ok(), std::string(name) + " N " + std::to_string(n) + " cap " + std::to_string(cap) + ": " +
                                u.detail);
        }
      }
  });

  // 1d
  criterion("1d latching filtration", kExactSeconds, [](Outcome& o) {
    for (const auto& name : builtin_names()) {
      const auto x = builtin_object(name, kFiltrationDegree);
      for (int n = 1; n <= kFiltrationDegree; ++n) {
        const auto r = latching_filtration(x, n);
        o.require(r.ok(), name + " n " + std::to_string(n) + ": " + r.detail);
      }
    }
  });

  // 1e
  criterion("1e diagonal-coend", kExactSeconds, [](Outcome& o) {
    for (const auto& name : builtin_names())
      for (int cap = 0; cap <= kSmallCap; ++cap) {
        const auto r = diagonal_coend_check(builtin_object(name, cap));
        o.require(r.ok(), name + " cap " + std::to_string(cap) + ": " + r.detail);
      }
  });

  // 2a
  homology_suite_seconds += criterion("2a simplex models", kHomologySuiteSeconds, [](Outcome& o) {
    const auto f = fat_cosimplicial(kD, kD);
    const auto s = standard_cosimplicial(kD, kD);
    const auto p = simp_cosimplicial(kD, kD, std::min(kD, 2));
    const auto q = q_cosimplicial(f, s);
    const auto lv = last_vertex_cosimplicial(p, s);
    const auto pt = homology(point(kD), kIsoDegree);
    for (int nb = 0; nb <= 4; ++nb) {
      const auto u = unravel_cosimplicial(kD, kD, nb);
      const auto pi = pi_cosimplicial(u, f);
      for (int n = 0; n <= std::min(2, nb); ++n) {
        const auto un = static_cast<std::size_t>(n);
        const std::string tag = " n " + std::to_string(n) + " N " + std::to_string(nb);
        o.require(homology(u.object.level(n), kIsoDegree) == pt, "unravel point homology" + tag);
        const auto v = homology_iso_check(u.object.level(n), f.object.level(n), pi.components[un], kIsoDegree);
        o.require(v.iso, "pi" + tag + ": " + v.detail);
        if (nb != 4) continue;
        o.require(homology(f.object.level(n), kIsoDegree) == pt, "fat point homology" + tag);
        o.require(homology(s.object.level(n), kIsoDegree) == pt, "standard point homology" + tag);
        o.require(homology(p.object.level(n), kIsoDegree) == pt, "simp point homology" + tag);
        const auto vq = homology_iso_check(f.object.level(n), s.object.level(n), q.components[un], kIsoDegree);
        o.require(vq.iso, "q" + tag + ": " + vq.detail);
        const auto vl = homology_iso_check(p.object.level(n), s.object.level(n), lv.components[un], kIsoDegree);
        o.require(vl.iso, "last vertex" + tag + ": " + vl.detail);
      }
    }
  });

  // 2b
  homology_suite_seconds += criterion("2b zig-zag", kHomologySuiteSeconds, [](Outcome& o) {
    for (const auto* name : kZigzagSet) {
      const auto x = builtin_object(name, kD);
      o.require(reedy_cofibrant_check(x).cofibrant(), std::string(name) + " not Reedy cofibrant");
      const auto fx = fat(x);
      const auto ux = unravel(x, kD + 1);
      const auto sx = simp(x, std::min(kD, 2));
      const auto dx = diagonal(x), dfx = diagonal(fx.object()), dux = diagonal(ux.object()),
                 dsx = diagonal(sx.object());
      const auto vp = homology_iso_check(dux, dfx, diagonal(proj_pi(ux, fx)), kIsoDegree);
      o.require(vp.iso, std::string(name) + " pi: " + vp.detail);
      const auto vq = homology_iso_check(dfx, dx, diagonal(proj_q(fx, x)), kIsoDegree);
      o.require(vq.iso, std::string(name) + " q: " + vq.detail);
      const auto vl = homology_iso_check(dsx, dx, diagonal(last_vertex(sx, x)), kIsoDegree);
      o.require(vl.iso, std::string(name) + " last vertex: " + vl.detail);
    }
  });

  // 2c
  homology_suite_seconds += criterion("2c pi o tau", kHomologySuiteSeconds, [](Outcome& o) {
    for (const auto* name : kZigzagSet) {
      std::optional<HomologySignature> first;
      const std::pair<int, int> runs[] = {{kD, kD + 1}, {kD, kD + 2}, {kD + 1, kD + 2}};
      for (const auto& [cap, nb] : runs) {
        const auto x = builtin_object(name, cap);
        const auto v = check_pi_tau(x, nb, kIsoDegree);
        const std::string tag = std::string(name) + " cap " + std::to_string(cap) + " N " + std::to_string(nb);
        o.require(v.ok(), tag + ": " + v.detail);
        if (!first) first = v.beta.target;
        o.require(v.beta.target == *first && v.pi_tau.source == v.beta.source, tag + ": signatures not stable");
      }
      const auto x = builtin_object(name, kD);
      const auto nat = tau_naturality(x, point_object(kD, kD), to_point(x), kD + 1);
      o.require(nat.commutes, std::string(name) + " naturality: " + nat.detail);
    }
  });

  // 2d
  homology_suite_seconds += criterion("2d negative control", kHomologySuiteSeconds, [](Outcome& o) {
    const auto c = circle(kD), pt = point(kD);
    SimplicialMap f;
    for (int j = 0; j <= kD; ++j) f.components.emplace_back(c.size(j), Cell{0});
    const auto v = homology_iso_check(c, pt, f, 1);
    o.require(!v.iso, "circle -> point certified as an isomorphism");
    o.require(v.first_failing_degree == 1, "rejection not located in degree 1");
    o.require(v.pi0_bijective, "components should match");
  });
  {
    const bool ok = homology_suite_seconds <= kHomologySuiteSeconds;
    std::printf("%s 2 suite runtime (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", homology_suite_seconds,
                kHomologySuiteSeconds);
    failures += !ok;
  }

  // 3
  criterion("3 fat point", kExactSeconds, [](Outcome& o) {
    const auto fp = diagonal(fat(point_object(kD, kD)).object());
    o.require(homology(fp, kD - 1) == homology(point(kD), kD - 1), "fat point homology differs from point");
    const auto semi = point(kD).as_semi();
    o.require(homology(semi, kD - 1) == homology(point(kD), kD - 1), "semi-simplicial point homology");
    const auto cc = chain_complex(semi);
    for (int n = 1; n <= kD; ++n) {
      const auto& col = cc.boundary[static_cast<std::size_t>(n)].columns[0];
      const bool expected = n % 2 ? col.empty() : (col.size() == 1 && (col[0].second == 1 || col[0].second == -1));
      o.require(expected, "boundary pattern in degree " + std::to_string(n));
    }
  });

  // 4
  criterion("4 rho face witness", kRhoSeconds, [](Outcome& o) {
    for (int n = 1; n <= 3; ++n) {
      const auto w = rho_face_counterexample(n, kRhoGrid);
      o.require(w.has_value(), "no witness for n " + std::to_string(n));
      if (!w) continue;
      o.require(verify_rho_witness(*w), "library re-verification failed for n " + std::to_string(n));
      // Both routes again, from the subset sum.
      const auto un = static_cast<std::size_t>(n);
      std::vector<Rational> pre;
      for (std::size_t i = 0; i <= un; ++i)
        if (static_cast<int>(i) != w->face) pre.push_back(w->t[i]);
      std::vector<Rational> lhs(un + 1), rhs(un + 1);
      for (int j = 0; j <= n; ++j) lhs[static_cast<std::size_t>(j)] = fold_by_subsets(w->t, j);
      for (int j = 0; j < n; ++j)
        rhs[static_cast<std::size_t>(j < w->face ? j : j + 1)] = fold_by_subsets(pre, j);
      Rational total = 0;
      for (std::size_t j = 0; j <= un; ++j) {
        const Rational d = lhs[j] - rhs[j];
        o.require(d == w->discrepancy[j], "discrepancy mismatch for n " + std::to_string(n));
        total += d < 0 ? Rational(-d) : d;
      }
      o.require(lhs == w->lhs.ambient(n) && rhs == w->rhs.ambient(n), "route mismatch for n " + std::to_string(n));
      o.require(total == w->total && total > 0, "total mismatch for n " + std::to_string(n));
      if (o.pass) o.note << "n " << n << " total " << total << (n < 3 ? "; " : "");
    }
  });

  // 5
  criterion("5 determinism", kExactSeconds, [](Outcome& o) {
    cli::JobConfig c;
    c.command = "report";
    c.input = "nerve_or";
    c.cap = kSmallCap;
    c.format = "json";
    c.seed = 20261015;
    const auto a = cli::render(cli::run(c), c);
    const auto b = cli::render(cli::run(c), c);
    o.require(a == b, "reports differ between runs");
    c.command = "homology";
    c.kind = "unravel";
    c.format = "csv";
    o.require(cli::render(cli::run(c), c) == cli::render(cli::run(c), c), "homology tables differ between runs");
  });

  std::printf("%s acceptance: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
