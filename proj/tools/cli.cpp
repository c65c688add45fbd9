#include "cli.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "realcmp/builtins.hpp"
#include "realcmp/coend.hpp"
#include "realcmp/error.hpp"
#include "realcmp/homology.hpp"
#include "realcmp/json_io.hpp"
#include "realcmp/reedy.hpp"
#include "realcmp/sset_ops.hpp"
#include "realcmp/tau_rho.hpp"

namespace realcmp::cli {

using nlohmann::json;

namespace {

struct Input {
  std::string name;
  SimplicialSet set;
  std::optional<FiniteCategory> category;
};

std::optional<FiniteCategory> builtin_category(const std::string& name) {
  if (name == "point") return terminal_category();
  if (name == "nerve1") return poset_category(1);
  if (name == "nerve_or") return or_category();
  if (name == "nerve_iso") return iso_groupoid();
  if (name.starts_with("simplex") && name.size() == 8) return poset_category(name[7] - '0');
  return std::nullopt;
}

Input load_input(const JobConfig& c) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), c.input) != names.end())
    return {c.input, builtin_set(c.input, c.cap), builtin_category(c.input)};
  std::ifstream in(c.input);
  if (!in) throw ConfigError("input '" + c.input + "' is neither a built-in object nor a readable file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError("/", std::string("malformed JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("morphisms")) {
    auto cat = finite_category_from_json(j);
    return {c.input, nerve(cat, c.cap), std::move(cat)};
  }
  if (j.is_object() && j.contains("counts")) {
    auto x = simplicial_set_from_json(j);
    if (x.cap() < c.cap)
      throw ConfigError("input cap " + std::to_string(x.cap()) + " is below the requested cap " + std::to_string(c.cap));
    if (x.cap() > c.cap) x = x.truncated(c.cap);
    return {c.input, std::move(x), std::nullopt};
  }
  throw SchemaError("/", "expected a simplicial set (with \"counts\") or a category (with \"morphisms\")");
}

int homology_degree(const JobConfig& c) { return c.max_degree.value_or(c.cap - 1); }

int iso_degree(const JobConfig& c) {
  const int m = c.max_degree.value_or(c.cap - 2);
  if (m < 0 || m > c.cap - 2)
    throw ConfigError("isomorphism certificates need 0 <= max degree <= cap - 2, got " + std::to_string(m));
  return m;
}

json config_json(const JobConfig& c) {
  json j{{"command", c.command}, {"input", c.input},    {"kind", c.kind},       {"cap", c.cap},
         {"flag_bound", c.n_bound()}, {"chain_bound", c.r_bound()}, {"seed", c.seed}};
  if (!c.selector.empty()) j["selector"] = c.selector;
  if (c.max_degree) j["max_degree"] = *c.max_degree;
  if (c.command == "counterexample" || c.selector == "rho-faces" || c.command == "report") {
    j["rho_dimension"] = c.rho_dimension;
    j["grid"] = c.grid;
  }
  return j;
}

std::string str(const Integer& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

json signature_json(const HomologySignature& s) {
  json a = json::array();
  for (std::size_t d = 0; d < s.degrees.size(); ++d) {
    json t = json::array();
    for (const auto& x : s.degrees[d].torsion) t.push_back(str(x));
    a.push_back({{"degree", d}, {"betti", s.degrees[d].betti}, {"torsion", t}});
  }
  return a;
}

json counts_json(const SimplicialSet& x) { return x.counts(); }

struct Checks {
  json list = json::array();
  bool pass = true;
  void add(const std::string& name, bool ok, const std::string& detail, json extra = json::object()) {
    extra["name"] = name;
    extra["pass"] = ok;
    extra["detail"] = detail;
    list.push_back(std::move(extra));
    pass = pass && ok;
  }
  void add(const std::string& name, const IsoReport& r) {
    add(name, r.ok(), r.detail,
        {{"source_counts", r.source_counts}, {"target_counts", r.target_counts}, {"bijective", r.bijective}});
  }
  void add(const std::string& name, const IsoVerdict& v) {
    json extra{{"max_degree", v.max_degree},
               {"pi0_bijective", v.pi0_bijective},
               {"source", v.source.to_string()},
               {"target", v.target.to_string()}};
    if (v.first_failing_degree) extra["first_failing_degree"] = *v.first_failing_degree;
    add(name, v.iso, v.detail, std::move(extra));
  }
};

SimplicialObject construction(const SimplicialObject& x, const JobConfig& c) {
  if (c.kind == "none") return x;
  if (c.kind == "fat") return fat(x).object();
  if (c.kind == "unravel") return unravel(x, c.n_bound()).object();
  if (c.kind == "simp") return simp(x, c.r_bound()).object();
  throw ConfigError("unknown construction kind '" + c.kind + "'");
}

void kan_coend(Checks& out, const SimplicialObject& x) { out.add("kan-coend", kan_coend_check(x)); }

void nerve_compat(Checks& out, const Input& in, const JobConfig& c) {
  if (!in.category) throw ConfigError("nerve-compat needs a category input");
  for (const auto& r : {nerve_compat_unravel(*in.category, c.n_bound(), c.cap), nerve_compat_fat(*in.category, c.cap)})
    out.add("nerve-compat " + r.kind, r.ok(), r.detail,
            {{"left_counts", r.left_counts}, {"right_counts", r.right_counts}});
}

void simplex_models(Checks& out, const JobConfig& c) {
  const int m = iso_degree(c), d = c.cap;
  const auto u = unravel_cosimplicial(d, d, c.n_bound());
  const auto f = fat_cosimplicial(d, d);
  const auto s = standard_cosimplicial(d, d);
  const auto p = simp_cosimplicial(d, d, c.r_bound());
  const auto pi = pi_cosimplicial(u, f), q = q_cosimplicial(f, s), lv = last_vertex_cosimplicial(p, s);
  const auto pt = homology(point(d), m);
  for (int n = 0; n <= std::min(2, d); ++n) {
    const std::string tag = " n=" + std::to_string(n);
    const std::pair<const char*, const CosimplicialObject*> models[] = {
        {"unravel", &u.object}, {"fat", &f.object}, {"standard", &s.object}, {"simp", &p.object}};
    for (const auto& [name, obj] : models) {
      const auto h = homology(obj->level(n), m);
      out.add(std::string("point homology ") + name + tag, h == pt, h.to_string(), {{"counts", counts_json(obj->level(n))}});
    }
    const auto un = static_cast<std::size_t>(n);
    out.add("pi" + tag, homology_iso_check(u.object.level(n), f.object.level(n), pi.components[un], m));
    out.add("q" + tag, homology_iso_check(f.object.level(n), s.object.level(n), q.components[un], m));
    out.add("last vertex" + tag, homology_iso_check(p.object.level(n), s.object.level(n), lv.components[un], m));
  }
}

void assoc(Checks& out, const SimplicialObject& x, const JobConfig& c) {
  const std::vector<std::string> kinds =
      c.kind == "none" ? std::vector<std::string>{"fat", "unravel", "simp"} : std::vector<std::string>{c.kind};
  for (const auto& k : kinds)
    out.add("assoc " + k, assoc_check(x, k, k == "unravel" ? c.n_bound() : c.r_bound()));
}

void latching(Checks& out, const SimplicialObject& x) {
  for (int n = 1; n <= x.cap(); ++n) {
    const auto r = latching_filtration(x, n);
    out.add("latching filtration n=" + std::to_string(n), r.ok(), r.detail, {{"stage_sizes", r.stage_sizes}});
  }
  const auto cof = reedy_cofibrant_check(x);
  out.add("reedy cofibrant", cof.cofibrant(), "");
  out.add("skeleta", skeleton_check(x).ok(), "");
}

struct Diagonals {
  FatObject fx;
  UnravelObject ux;
  SimpObject sx;
  SimplicialSet dx, dfx, dux, dsx;
};

Diagonals diagonals(const SimplicialObject& x, const JobConfig& c) {
  Diagonals d{fat(x), unravel(x, c.n_bound()), simp(x, c.r_bound()), diagonal(x), {}, {}, {}};
  d.dfx = diagonal(d.fx.object());
  d.dux = diagonal(d.ux.object());
  d.dsx = diagonal(d.sx.object());
  return d;
}

void zigzag_maps(Checks& out, const SimplicialObject& x, const Diagonals& d, int m) {
  out.add("pi", homology_iso_check(d.dux, d.dfx, diagonal(proj_pi(d.ux, d.fx)), m));
  out.add("q", homology_iso_check(d.dfx, d.dx, diagonal(proj_q(d.fx, x)), m));
  out.add("last vertex", homology_iso_check(d.dsx, d.dx, diagonal(last_vertex(d.sx, x)), m));
}

void zigzag(Checks& out, const SimplicialObject& x, const JobConfig& c) {
  const int m = iso_degree(c);
  out.add("reedy cofibrant", reedy_cofibrant_check(x).cofibrant(), "");
  out.add("diagonal-coend", diagonal_coend_check(x));
  zigzag_maps(out, x, diagonals(x, c), m);
}

void weak_equiv(Checks& out, const SimplicialObject& x, const JobConfig& c) {
  const int m = iso_degree(c);
  const auto d = diagonals(x, c);
  const auto hu = homology(d.dux, m), hf = homology(d.dfx, m), hs = homology(d.dsx, m);
  out.add("signatures agree", hu == hf && hf == hs,
          "unravel " + hu.to_string() + "; fat " + hf.to_string() + "; simp " + hs.to_string());
  zigzag_maps(out, x, d, m);
}

ObjectMap to_point(const SimplicialObject& x) {
  ObjectMap f;
  for (int n = 0; n <= x.cap(); ++n) {
    SimplicialMap s;
    for (int j = 0; j <= x.internal_cap(); ++j) s.components.emplace_back(x.level(n).size(j), Cell{0});
    f.components.push_back(std::move(s));
  }
  return f;
}

void pi_tau(Checks& out, const SimplicialObject& x, const JobConfig& c) {
  const int m = iso_degree(c), n_bound = c.n_bound();
  for (int nb : {n_bound, n_bound + 1}) {
    const auto v = check_pi_tau(x, nb, m);
    out.add("pi o tau N=" + std::to_string(nb), v.ok(), v.detail,
            {{"pi_tau_is_beta", v.pi_tau_is_beta},
             {"beta_iso", v.beta.iso},
             {"pi_tau_iso", v.pi_tau.iso},
             {"agree", v.agreement.agree},
             {"conclusive", v.agreement.conclusive}});
  }
  std::mt19937_64 rng(c.seed);
  const int scap = std::min(c.cap, 3);
  for (int n = 0; n <= std::min(2, c.cap); ++n) {
    const auto r = tau_semisimplicial(n, std::max(n_bound, scap), scap);
    bool faces = true;
    for (int trial = 0; trial < 200 && scap > 0; ++trial) {
      const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(scap));
      const auto& level = r.raw_cells[static_cast<std::size_t>(k)];
      const auto& cell = level[rng() % level.size()];
      const int i = static_cast<int>(rng() % static_cast<std::uint64_t>(k + 1));
      auto expected = tau_bar(cell);
      expected.simplex = compose(expected.simplex, MonotoneMap::coface(k, i));
      expected.flag.erase(expected.flag.begin() + i);
      faces = faces && tau_bar(r.raw_cells[static_cast<std::size_t>(k - 1)][r.raw.face(k, i, r.raw_cell(k, cell))]) == expected;
    }
    out.add("tau on subdivided simplex n=" + std::to_string(n), r.ok() && faces, r.detail,
            {{"random_face_checks", faces}});
  }
  const auto pt = point_object(c.cap, c.cap);
  const auto nat = tau_naturality(x, pt, to_point(x), n_bound);
  out.add("tau naturality", nat.commutes, nat.detail);
}

json witness_or_null(const std::optional<RhoWitness>& w) { return w ? to_json(*w) : json(nullptr); }

void rho_faces(Checks& out, const JobConfig& c) {
  const auto w = rho_face_counterexample(c.rho_dimension, c.grid);
  const bool ok = w && verify_rho_witness(*w);
  out.add("rho face counterexample", ok, w ? "witness found and re-verified" : "no witness on the grid",
          {{"witness", witness_or_null(w)}});
}

void run_selector(Checks& out, const std::string& sel, const Input& in, const SimplicialObject& x,
                  const JobConfig& c) {
  if (sel == "kan-coend") kan_coend(out, x);
  else if (sel == "nerve-compat") nerve_compat(out, in, c);
  else if (sel == "simplex-models") simplex_models(out, c);
  else if (sel == "assoc") assoc(out, x, c);
  else if (sel == "latching-filtration") latching(out, x);
  else if (sel == "zigzag") zigzag(out, x, c);
  else if (sel == "weak-equiv") weak_equiv(out, x, c);
  else if (sel == "pi-tau") pi_tau(out, x, c);
  else if (sel == "rho-faces") rho_faces(out, c);
  else throw ConfigError("unknown verification selector '" + sel + "'");
}

}  // namespace

const std::vector<std::string>& selectors() {
  static const std::vector<std::string> s = {"kan-coend", "nerve-compat", "simplex-models", "assoc",  "latching-filtration",
                                             "zigzag",    "weak-equiv",   "pi-tau",         "rho-faces"};
  return s;
}

void JobConfig::validate() const {
  if (cap < 1) throw ConfigError("cap must be positive");
  if (flag_bound && *flag_bound < 1) throw ConfigError("flag bound must be positive");
  const bool unravel_used = kind == "unravel" || command == "verify" || command == "report";
  if (unravel_used && n_bound() < cap)
    throw ConfigError("flag bound N = " + std::to_string(n_bound()) + " is below the cap D = " + std::to_string(cap));
  if (chain_bound && *chain_bound < 0) throw ConfigError("chain bound must be nonnegative");
  if (format != "text" && format != "json" && format != "csv") throw ConfigError("unknown format '" + format + "'");
  if (grid < 1) throw ConfigError("grid resolution must be positive");
  if (rho_dimension < 1) throw ConfigError("rho dimension must be positive");
}

JobResult run(const JobConfig& c) {
  c.validate();
  JobResult r;
  r.report["config"] = config_json(c);
  if (c.command == "counterexample") {
    const auto w = rho_face_counterexample(c.rho_dimension, c.grid);
    r.pass = w && verify_rho_witness(*w);
    r.report["witness"] = witness_or_null(w);
    r.report["verified"] = r.pass;
    return r;
  }
  const auto in = load_input(c);
  const auto x = discrete_object(in.set, c.cap);
  if (c.command == "build") {
    const auto obj = construction(x, c);
    r.report["object"] = to_json(obj);
    r.report["diagonal_counts"] = counts_json(diagonal(obj));
    return r;
  }
  if (c.command == "homology") {
    const int m = homology_degree(c);
    if (m < 0 || m > c.cap - 1) throw ConfigError("homology needs 0 <= max degree <= cap - 1");
    const auto d = diagonal(construction(x, c));
    const auto h = homology(d, m);
    r.report["counts"] = counts_json(d);
    r.report["homology"] = signature_json(h);
    r.report["signature"] = h.to_string();
    return r;
  }
  Checks checks;
  if (c.command == "verify") {
    if (c.selector.empty()) throw ConfigError("verify needs a selector");
    run_selector(checks, c.selector, in, x, c);
  } else if (c.command == "report") {
    for (const auto& s : selectors()) {
      if (s == "nerve-compat" && !in.category) continue;
      run_selector(checks, s, in, x, c);
    }
  } else {
    throw ConfigError("unknown command '" + c.command + "'");
  }
  r.report["checks"] = checks.list;
  r.report["pass"] = checks.pass;
  r.pass = checks.pass;
  return r;
}

std::string render(const JobResult& result, const JobConfig& c) {
  const auto& rep = result.report;
  std::ostringstream os;
  if (c.format == "json") {
    os << rep.dump(2) << '\n';
    return os.str();
  }
  const bool csv = c.format == "csv";
  if (rep.contains("homology")) {
    if (csv) os << "degree,betti,torsion\n";
    for (const auto& d : rep["homology"]) {
      std::string tor;
      for (const auto& t : d["torsion"]) tor += (tor.empty() ? "" : ";") + t.get<std::string>();
      if (csv) os << d["degree"] << ',' << d["betti"] << ',' << tor << '\n';
      else os << "H" << d["degree"] << " betti " << d["betti"] << (tor.empty() ? "" : " torsion " + tor) << '\n';
    }
    return os.str();
  }
  if (rep.contains("object")) {
    if (csv) os << "n,j,cells\n";
    const auto& levels = rep["object"]["levels"];
    for (std::size_t n = 0; n < levels.size(); ++n) {
      const auto& counts = levels[n]["counts"];
      if (csv) {
        for (std::size_t j = 0; j < counts.size(); ++j) os << n << ',' << j << ',' << counts[j] << '\n';
      } else {
        os << "X_" << n << ':';
        for (const auto& v : counts) os << ' ' << v;
        os << '\n';
      }
    }
    if (!csv) os << "diagonal: " << rep["diagonal_counts"].dump() << '\n';
    return os.str();
  }
  if (rep.contains("witness")) {
    if (rep["witness"].is_null()) {
      os << (csv ? "found\nfalse\n" : "no witness\n");
      return os.str();
    }
    const auto& w = rep["witness"];
    if (csv) {
      os << "n,face,t,lhs,rhs,discrepancy,total,verified\n";
      auto join = [](const json& a) {
        std::string s;
        for (const auto& v : a) s += (s.empty() ? "" : ";") + v.get<std::string>();
        return s;
      };
      os << w["n"] << ',' << w["face"] << ',' << join(w["t"]) << ',' << join(w["lhs"]["ambient"]) << ','
         << join(w["rhs"]["ambient"]) << ',' << join(w["discrepancy"]) << ',' << w["total"].get<std::string>() << ','
         << (result.pass ? "true" : "false") << '\n';
    } else {
      os << "n " << w["n"] << ", face " << w["face"] << ", t " << w["t"].dump() << '\n'
         << "direct     " << w["lhs"].dump() << '\n'
         << "via face   " << w["rhs"].dump() << '\n'
         << "discrepancy " << w["discrepancy"].dump() << " total " << w["total"].get<std::string>() << '\n'
         << "reading: " << w["reading"].get<std::string>() << '\n'
         << (result.pass ? "verified" : "NOT verified") << '\n';
    }
    return os.str();
  }
  if (csv) os << "check,pass,detail\n";
  for (const auto& ch : rep["checks"]) {
    const bool ok = ch["pass"].get<bool>();
    auto detail = ch["detail"].get<std::string>();
    if (csv) {
      std::string quoted = "\"";
      for (char ch2 : detail) quoted += ch2 == '"' ? std::string("\"\"") : std::string(1, ch2);
      os << ch["name"].get<std::string>() << ',' << (ok ? "true" : "false") << ',' << quoted << "\"\n";
    } else {
      os << (ok ? "PASS " : "FAIL ") << ch["name"].get<std::string>() << (detail.empty() ? "" : ": " + detail) << '\n';
    }
  }
  if (!csv) os << (result.pass ? "all checks passed" : "some checks FAILED") << '\n';
  return os.str();
}

}  // namespace realcmp::cli
