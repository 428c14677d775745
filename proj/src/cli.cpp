#include "treefit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "treefit/baselines.hpp"
#include "treefit/fitters.hpp"
#include "treefit/graphs.hpp"
#include "treefit/io.hpp"
#include "treefit/metric_stats.hpp"
#include "treefit/rng.hpp"

namespace treefit::cli {

namespace {

namespace fs = std::filesystem;

bool looks_like_csv(const std::string& path) {
  const auto ext = fs::path(path).extension().string();
  return ext == ".csv" || ext == ".CSV";
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream ss;
  ss << std::setprecision(precision) << v;
  return ss.str();
}

double ceil_log2(int k) { return k <= 1 ? 0.0 : std::ceil(std::log2(static_cast<double>(k))); }

void ensure_dir(const std::string& dir) {
  if (!dir.empty()) fs::create_directories(dir);
}

struct NamedFit {
  TreeFitResult result;
  bool has_tree = true;
  MergeLog linkage;  // slhc only
};

NamedFit run_algorithm(const std::string& algorithm, const DistanceMatrix& d, int base) {
  NamedFit out;
  if (algorithm == "hcc") {
    out.result = hcc_rooted_tree_fit(d, base);
  } else if (algorithm == "gromov") {
    out.result = gromov_tree_fit(d, base);
  } else if (algorithm == "nj") {
    out.result = neighbor_join(d);
  } else if (algorithm == "slhc") {
    const auto t0 = std::chrono::steady_clock::now();
    Ultrametric um = single_linkage_ultrametric(d);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.result.fitted = std::move(um.values);
    out.result.report = make_fit_report("slhc", d, out.result.fitted, secs);
    out.linkage = std::move(um.linkage);
    out.has_tree = false;
  } else {
    fail("unknown algorithm: " + algorithm);
  }
  return out;
}

bool takes_base(const std::string& algorithm) {
  return algorithm == "hcc" || algorithm == "gromov";
}

}  // namespace

DistanceMatrix load_input(const InputSpec& in) {
  require(!in.path.empty(), "--input is required");
  std::string format = in.format;
  if (format.empty()) format = looks_like_csv(in.path) ? "csv" : "edgelist";
  if (format == "csv") {
    require(!in.use_largest_component,
            "--largest-component applies to edge-list inputs only");
    return io::load_distance_csv(in.path);
  }
  if (format == "edgelist") {
    Graph g = parse_edge_list(io::read_file(in.path));
    if (in.use_largest_component) g = largest_component(g);
    return shortest_path_matrix(g);
  }
  fail("unknown input format: " + format);
}

int run_metrics(const MetricsOptions& opt, std::ostream& out) {
  const DistanceMatrix d = load_input(opt.input);
  std::optional<SampleMode> mode;
  if (opt.sample_count > 0) mode = SampleMode{opt.sample_count, opt.seed};
  const HypStats st = hyp_stats(d, 1.0, mode, opt.exact_limit);

  const int n = d.size();
  const double pairs = static_cast<double>(d.pair_count());
  const double bound =
      pairs == 0.0 ? 0.0
                   : 8.0 * static_cast<double>(choose3(static_cast<std::uint64_t>(n - 1))) *
                         st.avg_hyp / pairs;
  out << "n           " << n << "\n";
  out << "mode        " << (st.exact ? "exact" : "sampled (count=" + std::to_string(st.samples) +
                                                     ", seed=" + std::to_string(st.seed) + ")")
      << "\n";
  out << "hyp         " << fmt(st.hyp) << (st.exact ? "" : "  (sample max, lower bound)") << "\n";
  out << "avg_hyp     " << fmt(st.avg_hyp);
  if (!st.exact) out << " +-" << fmt(st.avg_hyp_half_width);
  out << "\n";
  out << "um          " << fmt(st.um) << (st.exact ? "" : "  (sample max, lower bound)") << "\n";
  out << "avg_um      " << fmt(st.avg_um);
  if (!st.exact) out << " +-" << fmt(st.avg_um_half_width);
  out << "\n";
  out << "bound_l1avg " << fmt(bound) << "\n";
  return 0;
}

int run_fit(const FitOptions& opt, std::ostream& out) {
  const DistanceMatrix d = load_input(opt.input);
  const int n = d.size();

  int base = -1;
  bool seeded = false;
  std::string chosen_by;
  if (takes_base(opt.algorithm)) {
    if (opt.root == "random") {
      Rng rng(opt.seed);
      base = rng.index(n);
      seeded = true;
    } else if (opt.root == "best") {
      require(opt.algorithm == "hcc", "--root best is supported for hcc only");
      chosen_by = "best";
    } else {
      std::size_t pos = 0;
      base = std::stoi(opt.root, &pos);
      require(pos == opt.root.size() && base >= 0 && base < n,
              "invalid root: " + opt.root);
    }
  }

  NamedFit fit;
  if (chosen_by == "best") {
    BestBaseResult best = best_base_tree_fit(d);
    base = best.base;
    fit.result = std::move(best.fit);
  } else {
    fit = run_algorithm(opt.algorithm, d, base);
  }
  FitReport& report = fit.result.report;
  if (seeded) {
    report.seed = opt.seed;
    report.seeded = true;
  }

  if (opt.check) {
    if (opt.algorithm == "hcc") {
      const double bound = 8.0 * hyperbolicity_vector(d, base).l1();
      report.bound_l1 = bound;
      require(report.l1_total <= bound + kTol, "check failed: l1 error above 8*||Delta_w||_1");
      out << "check: l1_total " << fmt(report.l1_total) << " <= bound " << fmt(bound) << "\n";
    } else if (opt.algorithm == "gromov") {
      const double bound = 2.0 * hyperbolicity_vector(d, base).linf() * ceil_log2(n - 2);
      require(report.linf <= bound + kTol,
              "check failed: linf error above 2*||Delta_w||_inf*ceil(log2(n-2))");
      out << "check: linf " << fmt(report.linf) << " <= bound " << fmt(bound) << "\n";
    } else if (opt.algorithm == "slhc") {
      const double bound = ultrametricity_vector(d).linf() * ceil_log2(n - 1);
      require(report.linf <= bound + kTol,
              "check failed: linf error above ||Delta||_inf*ceil(log2(n-1))");
      out << "check: linf " << fmt(report.linf) << " <= bound " << fmt(bound) << "\n";
    } else {
      out << "check: no distortion guarantee for " << opt.algorithm << "\n";
    }
  }

  if (!opt.out_dir.empty()) {
    ensure_dir(opt.out_dir);
    const fs::path dir(opt.out_dir);
    io::save_distance_csv(fit.result.fitted, dir / "fitted.csv");
    io::write_file(dir / "report.json", report.to_json() + "\n");
    if (fit.has_tree) io::save_tree(fit.result.tree, dir / "tree.txt");
    if (!fit.has_tree) io::save_merge_log_csv(fit.linkage, dir / "linkage.csv");
    out << "artifacts written to " << dir.string() << "\n";
  }

  out << report.to_json() << "\n";
  return 0;
}

int run_bench(const BenchOptions& opt, std::ostream& out) {
  require(opt.runs >= 1, "--runs must be at least 1");
  const DistanceMatrix d = load_input(opt.input);
  const int n = d.size();
  ensure_dir(opt.out_dir);

  BenchSummary summary;
  for (const auto& algorithm : opt.algorithms) {
    std::vector<FitReport> runs;
    if (takes_base(algorithm)) {
      runs.reserve(opt.runs);
      for (int i = 0; i < opt.runs; ++i) {
        const std::uint64_t seed = opt.seed0 + static_cast<std::uint64_t>(i);
        Rng rng(seed);
        const int base = rng.index(n);
        FitReport r = run_algorithm(algorithm, d, base).result.report;
        r.seed = seed;
        r.seeded = true;
        runs.push_back(std::move(r));
      }
    } else {
      runs.push_back(run_algorithm(algorithm, d, -1).result.report);  // deterministic
    }
    if (!opt.out_dir.empty()) {
      std::string lines;
      for (const auto& r : runs) lines += r.to_json() + "\n";
      io::write_file(fs::path(opt.out_dir) / ("bench_" + algorithm + ".jsonl"), lines);
    }
    summary.rows.push_back(summarize_runs(algorithm, runs));
  }

  out << std::left << std::setw(8) << "algo" << std::right << std::setw(6) << "runs"
      << std::setw(22) << "l1_avg" << std::setw(22) << "linf" << std::setw(22) << "time_s"
      << "\n";
  for (const auto& row : summary.rows) {
    out << std::left << std::setw(8) << row.algorithm << std::right << std::setw(6) << row.runs
        << std::setw(22) << (fmt(row.l1_avg_mean) + " +-" + fmt(row.l1_avg_sd, 3))
        << std::setw(22) << (fmt(row.linf_mean) + " +-" + fmt(row.linf_sd, 3)) << std::setw(22)
        << (fmt(row.time_mean, 4) + " +-" + fmt(row.time_sd, 3)) << "\n";
  }
  return 0;
}

int run_synth(const SynthOptions& opt, std::ostream& out) {
  Graph base;
  if (opt.tree.rfind("bt:", 0) == 0) {
    int r = 0, h = 0;
    const auto first = opt.tree.find(':'), second = opt.tree.find(':', first + 1);
    require(second != std::string::npos, "synth tree spec must be bt:<branching>:<height>");
    r = std::stoi(opt.tree.substr(first + 1, second - first - 1));
    h = std::stoi(opt.tree.substr(second + 1));
    base = balanced_tree(r, h);
  } else {
    base = parse_edge_list(io::read_file(opt.tree));
  }

  SyntheticSpec spec;
  spec.base = opt.tree;
  spec.n_extra_edges = opt.extra_edges;
  spec.delta = opt.delta;
  spec.seed = opt.seed;

  const Graph g = perturb_tree(base, spec);
  const DistanceMatrix d = shortest_path_matrix(g);

  ensure_dir(opt.out_dir);
  const fs::path dir(opt.out_dir);
  io::write_file(dir / (opt.name + ".edges"), format_edge_list(g));
  io::save_distance_csv(d, dir / (opt.name + ".csv"));
  nlohmann::json meta;
  meta["base"] = spec.base;
  meta["n"] = g.n;
  meta["extra_edges"] = spec.n_extra_edges;
  meta["delta"] = spec.delta;
  meta["seed"] = spec.seed;
  io::write_file(dir / (opt.name + ".json"), meta.dump() + "\n");

  out << "n " << g.n << ", edges " << g.edges.size() << ", seed " << spec.seed << "\n";
  out << "wrote " << (dir / (opt.name + ".edges")).string() << ", "
      << (dir / (opt.name + ".csv")).string() << "\n";
  return 0;
}

}  // namespace treefit::cli
