#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli.hpp"

namespace {

using divdiff::cli::OutputFormat;
using divdiff::cli::RunConfig;

struct CommandInfo {
  const char* name;
  const char* help;
  bool func, n, N, N_max, j, x, h, knots, basis, max_N;
};

constexpr CommandInfo kCommands[] = {
    // name          help                                                      func  n      N      Nmax   j      x      h      knots  basis  maxN
    {"eval", "divided difference at explicit knots", true, false, false, false, false, false, false, true, false, false},
    {"uniform", "divided difference at 0, 1/n, ..., 1", true, true, false, false, false, false, false, false, false, false},
    {"fd", "forward difference of order n", true, true, false, false, false, true, true, false, false, false},
    {"identity", "equispaced divided difference vs scaled forward difference", true, true, false, false, false, false, false, false, false, false},
    {"interp", "equispaced interpolant, leading coefficient, degree reduction", true, true, false, false, false, false, false, false, false, false},
    {"cascade", "vanishing-difference cascade for a polynomial", true, false, false, false, false, false, false, false, false, false},
    {"nullspace", "kernel of the order-N constraint system", false, false, true, false, false, false, false, false, true, true},
    {"minlip", "minimal Lipschitz constant of a unit-norm kernel element", false, false, true, false, false, false, false, false, false, true},
    {"probe", "averaged differences of a zero-extended function", true, true, true, true, false, true, true, false, false, false},
    {"telescope", "reindexing identity for shifts by n! h", true, true, true, false, true, true, true, false, false, false},
    {"walkthrough", "every finite-N quantity of the averaging argument", true, true, true, false, false, true, true, false, false, false},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact divided and finite differences on equispaced knots"};
  app.set_version_flag("--version", divdiff::cli::kVersion);
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::string out_path;

  for (const auto& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    sub->set_help_flag("--help", "print this help and exit");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_flag("--decimals", cfg.decimals, "add 15-digit decimal columns next to exact values");
    if (info.func) {
      sub->add_option("--func", cfg.func, "poly:a0,a1,...  ratfun:a0,...;b0,...  pl:<path>");
      sub->add_flag("--extend-zero", cfg.extend_zero, "evaluate to 0 outside [0,1]");
    }
    if (info.n) sub->add_option("--n", cfg.n, "order");
    if (info.N) sub->add_option("--N", cfg.N, "constraint order / sample count");
    if (info.N_max) sub->add_option("--Nmax", cfg.N_max, "largest sample count (doubling from --N)");
    if (info.j) sub->add_option("--j", cfg.j, "index j in 1..n");
    if (info.x) sub->add_option("--x", cfg.x, "point, p/q");
    if (info.h) sub->add_option("--h", cfg.h, "step, p/q");
    if (info.knots) {
      sub->add_option("--knots", cfg.knots, "comma-separated knots");
      sub->add_option("--values", cfg.values, "comma-separated values (instead of --func)");
    }
    if (info.basis) sub->add_flag("--basis", cfg.basis, "include the kernel basis");
    if (info.max_N) sub->add_option("--max-N", cfg.max_N_override, "raise the default cap on N");
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : divdiff::cli::kExitUsage;
  }
  cfg.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;

  const auto outcome = divdiff::cli::run(cfg);
  if (!outcome.diagnostic.empty()) std::cerr << "divdiff " << outcome.diagnostic << '\n';
  if (!outcome.data.empty()) {
    if (out_path.empty()) {
      std::cout << outcome.data;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file) {
        std::cerr << "divdiff: cannot write " << out_path << '\n';
        return divdiff::cli::kExitUsage;
      }
      file << outcome.data;
    }
  }
  return outcome.exit_code;
}
