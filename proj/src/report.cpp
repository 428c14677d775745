#include "treefit/report.hpp"

#include <cmath>

#include <json.hpp>

namespace treefit {

std::string FitReport::to_json() const {
  nlohmann::json j;
  j["algorithm"] = algorithm;
  j["n"] = n;
  if (base >= 0) j["base"] = base;
  if (seeded) j["seed"] = seed;
  j["l1_total"] = l1_total;
  j["l1_avg"] = l1_avg;
  j["linf"] = linf;
  j["wall_time_seconds"] = wall_time_seconds;
  if (bound_l1) j["bound_l1"] = *bound_l1;
  return j.dump();
}

FitReport parse_fit_report_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  FitReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.n = j.at("n").get<int>();
  if (j.contains("base")) r.base = j.at("base").get<int>();
  if (j.contains("seed")) {
    r.seed = j.at("seed").get<std::uint64_t>();
    r.seeded = true;
  }
  r.l1_total = j.at("l1_total").get<double>();
  r.l1_avg = j.at("l1_avg").get<double>();
  r.linf = j.at("linf").get<double>();
  r.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  if (j.contains("bound_l1")) r.bound_l1 = j.at("bound_l1").get<double>();
  return r;
}

FitReport make_fit_report(std::string algorithm, const DistanceMatrix& d,
                          const DistanceMatrix& fitted, double seconds, int base) {
  FitReport r;
  r.algorithm = std::move(algorithm);
  r.base = base;
  r.n = d.size();
  r.l1_total = l1_distance(d, fitted);
  r.l1_avg = d.pair_count() == 0 ? 0.0 : r.l1_total / static_cast<double>(d.pair_count());
  r.linf = linf_distance(d, fitted);
  r.wall_time_seconds = seconds;
  return r;
}

BenchSummary::Row summarize_runs(const std::string& algorithm,
                                 const std::vector<FitReport>& runs) {
  BenchSummary::Row row;
  row.algorithm = algorithm;
  row.runs = static_cast<int>(runs.size());
  if (runs.empty()) return row;
  auto mean_sd = [&](auto field) {
    double mean = 0.0;
    for (const auto& r : runs) mean += field(r);
    mean /= runs.size();
    double var = 0.0;
    for (const auto& r : runs) var += (field(r) - mean) * (field(r) - mean);
    const double sd = runs.size() > 1 ? std::sqrt(var / (runs.size() - 1)) : 0.0;
    return std::make_pair(mean, sd);
  };
  std::tie(row.l1_avg_mean, row.l1_avg_sd) = mean_sd([](const FitReport& r) { return r.l1_avg; });
  std::tie(row.linf_mean, row.linf_sd) = mean_sd([](const FitReport& r) { return r.linf; });
  std::tie(row.time_mean, row.time_sd) =
      mean_sd([](const FitReport& r) { return r.wall_time_seconds; });
  return row;
}

}  // namespace treefit
