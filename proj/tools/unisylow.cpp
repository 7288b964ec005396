#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "unisylow/cli.hpp"

using namespace unisylow;

namespace {

void add_common(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--p", c.p, "prime p")->required();
  cmd->add_option("--q", c.q, "order of the field F_q (a power of p)");
  cmd->add_option("--k", c.k, "q = p^k, alternative to --q");
  cmd->add_option("--n", c.n, "matrix size n");
  cmd->add_option("--m", c.m, "matrix size for the flip-transpose identities");
  cmd->add_option("--r", c.r, "bottom cyclic group C_{p^r} of a wreath tower");
  cmd->add_option("--height", c.height, "number of wreath layers");
  cmd->add_option("--budget", c.budget, "maximum number of group elements")->capture_default_str();
  cmd->add_option("--seed", c.seed, "seed for sampled checks")->capture_default_str();
  cmd->add_option("--samples", c.samples, "samples per randomized check")->capture_default_str();
  cmd->add_option("--cache-dir", c.cache_dir, "group cache directory (default: $UNISYLOW_CACHE_DIR)");
  cmd->add_flag("--timing", c.timing, "include wall-clock seconds in the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow subgroups of unitary groups, Oliver's X(S) and the Thompson subgroup"};
  app.set_version_flag("--version", std::string("unisylow ") + kToolVersion);
  app.require_subcommand(1);

  RunConfig c;
  auto* construct = app.add_subcommand("construct", "enumerate a group and write or check its cache file");
  add_common(construct, c);
  construct->add_option("--out", c.out, "cache file path (default: <cache-dir>/<canonical name>.cache)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, c);
  verify->add_option("--suite", c.suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"prop31", "sylow", "formulas", "centralizer", "qseries", "thm26"}));
  verify->add_option("--out", c.out, "report path (default: stdout)");

  auto* compute = app.add_subcommand("compute", "compute J(S) and X(S)");
  add_common(compute, c);
  compute->add_option("--out", c.out, "report path (default: stdout)");

  auto* conjecture = app.add_subcommand("conjecture", "check J(S) <= X(S) with its supporting checks");
  add_common(conjecture, c);
  conjecture->add_option("--out", c.out, "report path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  c.command = app.get_subcommands().front()->get_name();

  const RunResult res = run(c);
  const std::string text = res.report.render(c.timing);
  if (!res.error.empty()) std::cerr << "unisylow: " << res.error << "\n";
  if (c.command == "construct" || c.out.empty()) {
    std::cout << text;
  } else if (!write_report(c.out, text)) {
    std::cerr << "unisylow: cannot write report to " << c.out << "\n";
    return kExitIo;
  }
  return res.exit_code;
}
