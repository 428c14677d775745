#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "treefit/distance_matrix.hpp"

namespace treefit::cli {

struct InputSpec {
  std::string path;
  std::string format;  // "csv", "edgelist", or empty for by-extension
  bool use_largest_component = false;
};

/// Distance CSV directly, or edge list through shortest paths.
DistanceMatrix load_input(const InputSpec& in);

struct MetricsOptions {
  InputSpec input;
  std::uint64_t sample_count = 0;  // 0 = exact sweeps
  std::uint64_t seed = 0;
  std::uint64_t exact_limit = 100'000'000;
};

struct FitOptions {
  InputSpec input;
  std::string algorithm = "hcc";  // hcc | gromov | nj | slhc
  std::string root = "0";         // index | random | best
  std::uint64_t seed = 0;
  bool check = false;
  std::string out_dir;  // artifacts written here when nonempty
};

struct BenchOptions {
  InputSpec input;
  std::vector<std::string> algorithms{"hcc", "gromov", "nj", "slhc"};
  int runs = 100;
  std::uint64_t seed0 = 0;
  std::string out_dir;
};

struct SynthOptions {
  std::string tree = "bt:3:5";  // generator id or edge-list path
  int extra_edges = 500;
  double delta = 0.1;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string name = "synthetic";
};

int run_metrics(const MetricsOptions& opt, std::ostream& out);
int run_fit(const FitOptions& opt, std::ostream& out);
int run_bench(const BenchOptions& opt, std::ostream& out);
int run_synth(const SynthOptions& opt, std::ostream& out);

}  // namespace treefit::cli
