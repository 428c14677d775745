#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treefit/distance_matrix.hpp"

namespace treefit {

/// Per-run record of a fitting algorithm: identity, errors, timing.
struct FitReport {
  std::string algorithm;
  int base = -1;  // -1 when the algorithm takes no base point
  std::uint64_t seed = 0;
  bool seeded = false;
  int n = 0;
  double l1_total = 0.0;
  double l1_avg = 0.0;  // l1_total / C(n,2)
  double linf = 0.0;
  double wall_time_seconds = 0.0;
  std::optional<double> bound_l1;  // theorem bound on l1_total, when computed

  std::string to_json() const;
};

FitReport parse_fit_report_json(const std::string& text);

/// Fills the error fields of a report from the input and fitted distances.
FitReport make_fit_report(std::string algorithm, const DistanceMatrix& d,
                          const DistanceMatrix& fitted, double seconds, int base = -1);

struct BenchSummary {
  struct Row {
    std::string algorithm;
    int runs = 0;
    double l1_avg_mean = 0.0, l1_avg_sd = 0.0;
    double linf_mean = 0.0, linf_sd = 0.0;
    double time_mean = 0.0, time_sd = 0.0;
  };
  std::vector<Row> rows;
};

/// Mean and sample standard deviation of the error/time fields.
BenchSummary::Row summarize_runs(const std::string& algorithm,
                                 const std::vector<FitReport>& runs);

}  // namespace treefit
