#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli.hpp"
#include "realcmp/error.hpp"

namespace {

void add_common(CLI::App* sub, realcmp::cli::JobConfig& c) {
  sub->add_option("--input", c.input, "built-in object name or JSON file (simplicial set or category)");
  sub->add_option("--cap", c.cap, "truncation cap D");
  sub->add_option("--flag-bound", c.flag_bound, "flag bound N (default D + 1)");
  sub->add_option("--max-degree", c.max_degree, "top homology degree");
  sub->add_option("--chain-bound", c.chain_bound, "chain bound R for simp (default min(D, 2))");
  sub->add_option("--seed", c.seed, "seed for sampled checks");
}

}  // namespace

int main(int argc, char** argv) {
  realcmp::cli::JobConfig c;
  std::string out;
  CLI::App app{"Combinatorial models of geometric realization"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", out, "write the report to this file");

  auto* build = app.add_subcommand("build", "build a construction and print it");
  add_common(build, c);
  build->add_option("--kind", c.kind)->check(CLI::IsMember({"none", "fat", "unravel", "simp"}));

  auto* hom = app.add_subcommand("homology", "integral homology of the diagonal of a construction");
  add_common(hom, c);
  hom->add_option("--kind", c.kind)->check(CLI::IsMember({"none", "fat", "unravel", "simp"}));

  auto* verify = app.add_subcommand("verify", "run one family of checks");
  add_common(verify, c);
  verify->add_option("selector", c.selector)->required()->check(CLI::IsMember(realcmp::cli::selectors()));
  verify->add_option("--kind", c.kind, "assoc only: restrict to one kind")
      ->check(CLI::IsMember({"none", "fat", "unravel", "simp"}));
  verify->add_option("--n", c.rho_dimension, "rho-faces: simplex dimension");
  verify->add_option("--grid", c.grid, "rho-faces: grid resolution");

  auto* cex = app.add_subcommand("counterexample", "search the rational grid for a face witness");
  cex->add_option("--n", c.rho_dimension, "simplex dimension");
  cex->add_option("--grid", c.grid, "grid resolution");

  auto* report = app.add_subcommand("report", "run every applicable check");
  add_common(report, c);
  report->add_option("--n", c.rho_dimension);
  report->add_option("--grid", c.grid);

  for (auto* s : {build, hom, verify, cex, report}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);
  c.command = app.get_subcommands().front()->get_name();

  try {
    const auto result = realcmp::cli::run(c);
    const auto text = realcmp::cli::render(result, c);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out);
      if (!f) throw realcmp::ConfigError("cannot write " + out);
      f << text;
    }
    return result.pass ? 0 : 1;
  } catch (const realcmp::SchemaError& e) {
    std::cerr << "schema error at " << e.pointer() << ": " << e.what() << '\n';
  } catch (const realcmp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return 2;
}
