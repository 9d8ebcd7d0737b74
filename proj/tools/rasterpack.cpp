#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "rasterpack/commands.hpp"

using namespace rasterpack;

namespace {

const std::map<std::string, bool> kOnOff{{"on", true}, {"off", false}};

void add_solver_flags(CLI::App* cmd, SolverConfig& cfg, bool& reduction) {
  cmd->add_option("--width-px", cfg.width_px, "Container width in pixels")->capture_default_str();
  cmd->add_option("--time-limit", cfg.time_limit, "Search time limit in seconds")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_option("--rdec", cfg.r_dec, "Shrink ratio")->capture_default_str();
  cmd->add_option("--rinc", cfg.r_inc, "Extend ratio")->capture_default_str();
  cmd->add_option("--kmax", cfg.k_max, "Non-improving CDH calls before GLS gives up")
      ->capture_default_str();
  cmd->add_option("--max-cdh-calls", cfg.max_cdh_calls,
                  "Stop after this many CDH calls (0: unlimited)")
      ->capture_default_str();
  cmd->add_option("--corner-reduction", reduction, "on|off")
      ->transform(CLI::CheckedTransformer(kOnOff, CLI::ignore_case))
      ->default_str("on");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Raster irregular strip packing"};
  app.require_subcommand(1);

  SolveOptions solve;
  bool solve_reduction = true;
  auto* s = app.add_subcommand("solve", "Pack an instance");
  s->add_option("--instance", solve.instance, "Instance JSON")->required();
  add_solver_flags(s, solve.config, solve_reduction);
  s->add_option("--out", solve.out, "Result JSON path");
  s->add_option("--svg", solve.svg, "SVG drawing path");

  NfpOptions nfp;
  auto* n = app.add_subcommand("nfp", "Dump the NFP of two shapes as PBM");
  n->add_option("--instance", nfp.instance, "Instance JSON")->required();
  n->add_option("--width-px", nfp.width_px, "Container width in pixels")->capture_default_str();
  n->add_option("--a", nfp.shape_a, "Fixed shape id")->required();
  n->add_option("--b", nfp.shape_b, "Moving shape id")->required();
  n->add_option("--deg-a", nfp.degrees_a, "Orientation of a")->capture_default_str();
  n->add_option("--deg-b", nfp.degrees_b, "Orientation of b")->capture_default_str();
  n->add_option("--out", nfp.out, "PBM path (default stdout)");

  OracleOptions oracle;
  auto* o = app.add_subcommand("oracle", "Check the engine against brute force");
  o->add_option("--seed", oracle.seed, "Random seed")->capture_default_str();
  o->add_option("--pairs", oracle.pairs, "Random shape pairs")->capture_default_str();
  o->add_option("--grid", oracle.max_grid, "Largest shape grid")->capture_default_str();
  o->add_flag("--inject-fault", oracle.inject_fault, "Corrupt one NFP to test detection");

  RenderOptions render;
  auto* r = app.add_subcommand("render", "Draw a result file as SVG");
  r->add_option("--instance", render.instance, "Instance JSON")->required();
  r->add_option("--result", render.result, "Result JSON")->required();
  r->add_option("--svg", render.svg, "SVG path (default stdout)");

  BenchOptions bench;
  bool bench_reduction = true;
  std::string bench_mode;
  auto* b = app.add_subcommand("bench", "Run seeds over a directory of instances");
  b->add_option("--instances", bench.directory, "Directory of instance JSON files")->required();
  b->add_option("--runs", bench.runs, "Seeds per instance")->capture_default_str();
  add_solver_flags(b, bench.config, bench_reduction);
  b->add_flag("--paired", "Run every seed with and without corner reduction");
  b->add_option("--out", bench.out, "CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*s) {
      solve.config.corner_reduction = solve_reduction;
      return solve_command(solve, std::cout, std::cerr);
    }
    if (*n) return nfp_command(nfp, std::cout, std::cerr);
    if (*o) return oracle_command(oracle, std::cout, std::cerr);
    if (*r) return render_command(render, std::cout, std::cerr);
    if (*b) {
      bench.reduction = b->count("--paired") > 0 ? Reduction::both
                        : bench_reduction        ? Reduction::on
                                                 : Reduction::off;
      return bench_command(bench, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
