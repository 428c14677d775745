#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "treefit/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Tree and ultrametric fitting with hyperbolicity diagnostics"};
  app.require_subcommand(1);

  treefit::cli::MetricsOptions metrics;
  treefit::cli::FitOptions fit;
  treefit::cli::BenchOptions bench;
  treefit::cli::SynthOptions synth;

  auto add_input = [](CLI::App* cmd, treefit::cli::InputSpec& in) {
    cmd->add_option("--input", in.path, "distance CSV or edge-list file")->required();
    cmd->add_option("--format", in.format, "csv|edgelist (default: by extension)");
    cmd->add_flag("--largest-component", in.use_largest_component,
                  "restrict edge-list input to its largest connected component");
  };

  CLI::App* m = app.add_subcommand("metrics", "hyperbolicity/ultrametricity statistics");
  add_input(m, metrics.input);
  m->add_option("--sample", metrics.sample_count, "Monte Carlo sample count (0 = exact)");
  m->add_option("--seed", metrics.seed, "sampling seed");
  m->add_option("--exact-limit", metrics.exact_limit,
                "largest quadruple count for exact sweeps");

  CLI::App* f = app.add_subcommand("fit", "fit one tree or ultrametric");
  add_input(f, fit.input);
  f->add_option("--algorithm", fit.algorithm, "hcc|gromov|nj|slhc")->required();
  f->add_option("--root", fit.root, "base point index, 'random', or 'best'");
  f->add_option("--seed", fit.seed, "seed for --root random");
  f->add_flag("--check", fit.check, "assert the distortion guarantee");
  f->add_option("--out", fit.out_dir, "directory for tree/fitted/report artifacts");

  CLI::App* b = app.add_subcommand("bench", "repeated seeded runs with mean +- sd");
  add_input(b, bench.input);
  b->add_option("--algorithm", bench.algorithms, "algorithms to run")
      ->delimiter(',')
      ->expected(1, 4);
  b->add_option("--runs", bench.runs, "runs per base-dependent algorithm");
  b->add_option("--seed", bench.seed0, "first run seed (run i uses seed+i)");
  b->add_option("--out", bench.out_dir, "directory for per-run JSON lines");

  CLI::App* s = app.add_subcommand("synth", "synthetic near-tree metric generator");
  s->add_option("--tree", synth.tree, "base tree: bt:<branching>:<height> or edge-list file");
  s->add_option("--edges", synth.extra_edges, "number of shortcut edges to add");
  s->add_option("--delta", synth.delta, "shortcut shrinkage parameter");
  s->add_option("--seed", synth.seed, "generator seed");
  s->add_option("--out", synth.out_dir, "output directory");
  s->add_option("--name", synth.name, "output file prefix");

  CLI11_PARSE(app, argc, argv);

  try {
    if (m->parsed()) return treefit::cli::run_metrics(metrics, std::cout);
    if (f->parsed()) return treefit::cli::run_fit(fit, std::cout);
    if (b->parsed()) return treefit::cli::run_bench(bench, std::cout);
    if (s->parsed()) return treefit::cli::run_synth(synth, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
