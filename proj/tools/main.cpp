#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "matchkit/error.hpp"

using namespace matchkit::cli;

namespace {

std::size_t budget_from_env() {
  const char* env = std::getenv("MATCHKIT_BUDGET");
  if (!env) return matchkit::kDefaultBudget;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || v == 0) return matchkit::kDefaultBudget;
  return static_cast<std::size_t>(v);
}

int finish(const CommandResult& r) {
  std::cout << r.report.dump(2) << "\n";
  if (r.report.contains("error"))
    std::cerr << r.report["error"].get<std::string>() << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matching covered graph toolkit"};
  app.require_subcommand(1);

  std::size_t budget = budget_from_env();
  std::uint64_t seed = 0;
  app.add_option("--budget", budget, "enumeration budget (default 10^6)");
  app.add_option("--seed", seed, "seed for randomised modes");

  std::string graph_path, mode = "structural", out_path, report_path, family;
  bool no_witness = false, use_stdin = false;
  int max_order = 8, perturbations = 0;
  GenerateSpec spec;

  CLI::App* decide = app.add_subcommand(
      "decide", "decide Birkhoff-von Neumann plus PM-compact, with certificates");
  decide->add_option("graph", graph_path, "mcg graph file")->required();
  bool opt_structural = false, opt_oracle = false, opt_both = false;
  decide->add_flag("--structural", opt_structural, "retract + family matching");
  decide->add_flag("--oracle", opt_oracle, "exhaustive bicycle search");
  decide->add_flag("--both", opt_both, "run both and compare (exit 4 on clash)");
  decide->add_flag("--no-witness", no_witness, "skip negative certificates");

  CLI::App* generate = app.add_subcommand("generate", "write a family member");
  generate->add_option("family", spec.family,
                       "k2_multi k33 k4_multi odd_wheel prism moebius_ladder "
                       "truncated_biwheel staircase petersen k4_splice_k33 "
                       "murty p_brick")
      ->required();
  generate->add_option("--k", spec.k, "wheel / p_brick parameter");
  generate->add_option("--order", spec.order, "order for the fixed families");
  generate->add_option("--extra", spec.extra, "extra parallel a1a2 edges (murty)");
  generate->add_option("--multiplicity", spec.multiplicity, "k2_multi multiplicity");
  generate->add_option("--spoke-mults", spec.spoke_mults, "odd_wheel spoke multiplicities");
  generate->add_option("--k4-mults", spec.k4_mults, "k4_multi per-pair multiplicities");
  generate->add_option("--out", out_path, "output file")->required();

  CLI::App* decompose = app.add_subcommand("decompose", "tight cut decomposition");
  decompose->add_option("graph", graph_path, "mcg graph file")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "strictly-thin-edge reduction");
  reduce->add_option("graph", graph_path, "mcg graph file")->required();

  CLI::App* skeleton = app.add_subcommand("skeleton", "perfect matching polytope skeleton");
  skeleton->add_option("graph", graph_path, "mcg graph file")->required();

  CLI::App* crossval = app.add_subcommand(
      "crossval", "exhaustive structural-versus-oracle comparison");
  crossval->add_option("--max-order", max_order, "largest order (<= 12)");
  crossval->add_option("--perturb", perturbations,
                       "seeded multigraph perturbations of family members");
  crossval->add_flag("--stdin", use_stdin, "read mcg graph stream from stdin");

  CLI::App* validate = app.add_subcommand(
      "validate", "re-validate a decide report against its graph");
  validate->add_option("graph", graph_path, "mcg graph file")->required();
  validate->add_option("report", report_path, "decide report JSON")->required();

  CLI11_PARSE(app, argc, argv);

  if (decide->parsed()) {
    int picked = int(opt_structural) + int(opt_oracle) + int(opt_both);
    if (picked > 1) {
      std::cerr << "pick one of --structural, --oracle, --both\n";
      return kExitInputError;
    }
    if (opt_oracle) mode = "oracle";
    if (opt_both) mode = "both";
    return finish(cmd_decide(graph_path, mode, no_witness, budget));
  }
  if (generate->parsed()) return finish(cmd_generate(spec, out_path));
  if (decompose->parsed()) return finish(cmd_decompose(graph_path));
  if (reduce->parsed()) return finish(cmd_reduce(graph_path));
  if (skeleton->parsed()) return finish(cmd_skeleton(graph_path, budget));
  if (crossval->parsed())
    return finish(cmd_crossval(max_order, seed, budget, perturbations,
                               use_stdin ? &std::cin : nullptr));
  if (validate->parsed()) return finish(cmd_validate(graph_path, report_path));
  return kExitInputError;
}
