#include "treefit/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "treefit/rng.hpp"

namespace treefit::oracle {

namespace {

double gp(const DistanceMatrix& d, int base, int x, int y) {
  return 0.5 * (d(x, base) + d(y, base) - d(x, y));
}

std::string tuple_text(std::initializer_list<int> ids) {
  std::string s = "(";
  bool first = true;
  for (int v : ids) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["instance"] = instance;
  j["pass"] = pass;
  if (!pass) j["witness"] = witness;
  return j.dump();
}

double tp_by_enumeration(const DistanceMatrix& d, int x, int y, int z) {
  std::array<int, 3> p{x, y, z};
  std::sort(p.begin(), p.end());
  double best = -std::numeric_limits<double>::infinity();
  do {
    best = std::max(best, d(p[0], p[2]) - std::max(d(p[0], p[1]), d(p[1], p[2])));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

double fp_by_enumeration(const DistanceMatrix& d, int x, int y, int z, int w) {
  std::array<int, 4> p{x, y, z, w};
  std::sort(p.begin(), p.end());
  double best = -std::numeric_limits<double>::infinity();
  do {
    best = std::max(best, std::min(gp(d, p[3], p[0], p[2]), gp(d, p[3], p[1], p[2])) -
                              gp(d, p[3], p[0], p[1]));
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

VerificationReport verify_ultrametric(const DistanceMatrix& d, double tol) {
  VerificationReport report;
  report.property = "ultrametric";
  report.instance = "n=" + std::to_string(d.size());
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (d(x, y) > std::max(d(x, z), d(y, z)) + tol) {
          report.pass = false;
          std::ostringstream w;
          w << "triple " << tuple_text({x, y, z}) << ": d(x,y)=" << d(x, y)
            << " > max(d(x,z),d(y,z))=" << std::max(d(x, z), d(y, z));
          report.witness = w.str();
          return report;
        }
      }
  return report;
}

VerificationReport verify_tree_metric(const DistanceMatrix& d, double tol) {
  VerificationReport report;
  report.property = "tree_metric";
  report.instance = "n=" + std::to_string(d.size());
  const int n = d.size();
  auto fail_with = [&](const std::string& witness) {
    report.pass = false;
    report.witness = witness;
    return report;
  };
  for (int x = 0; x < n; ++x) {
    if (std::abs(d(x, x)) > tol) return fail_with("nonzero diagonal at " + std::to_string(x));
    for (int y = x + 1; y < n; ++y)
      if (d(x, y) < -tol)
        return fail_with("negative distance at " + tuple_text({x, y}));
  }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (d(x, y) > d(x, z) + d(z, y) + tol) {
          std::ostringstream w;
          w << "triangle inequality fails on " << tuple_text({x, y, z}) << ": " << d(x, y)
            << " > " << d(x, z) + d(z, y);
          return fail_with(w.str());
        }
      }
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        for (int w = z + 1; w < n; ++w) {
          const double fp = fp_by_enumeration(d, x, y, z, w);
          if (fp > tol) {
            std::ostringstream msg;
            msg << "four-point value " << fp << " on " << tuple_text({x, y, z, w});
            return fail_with(msg.str());
          }
        }
  return report;
}

MergeLog hcc_triangle_reference(const EdgeOrdering& order) {
  order.validate();
  const int n = order.n;
  MergeLog log;
  log.n = n;
  if (n <= 1) return log;

  std::vector<std::uint8_t> adjacent(static_cast<std::size_t>(n) * n, 0);
  std::vector<int> label(n), cluster_id(n);
  std::iota(label.begin(), label.end(), 0);
  std::iota(cluster_id.begin(), cluster_id.end(), 0);
  std::vector<std::vector<int>> members(n);
  for (int v = 0; v < n; ++v) members[v] = {v};

  for (std::size_t t = 0; t < order.pairs.size(); ++t) {
    const auto [x, y] = order.pairs[t];
    adjacent[static_cast<std::size_t>(x) * n + y] = 1;
    adjacent[static_cast<std::size_t>(y) * n + x] = 1;
    const int a = label[x], b = label[y];
    if (a == b) continue;
    const bool merge = is_highly_connected(
        std::span<const int>(members[a]), std::span<const int>(members[b]),
        [&](int u, int v) { return adjacent[static_cast<std::size_t>(u) * n + v] != 0; });
    if (!merge) continue;

    MergeRow row;
    row.id_a = std::min(cluster_id[a], cluster_id[b]);
    row.id_b = std::max(cluster_id[a], cluster_id[b]);
    row.step = static_cast<std::int64_t>(t + 1);
    row.height = order.weighted() ? order.weights[t] : static_cast<double>(t + 1);
    row.size = static_cast<int>(members[a].size() + members[b].size());
    cluster_id[a] = n + static_cast<int>(log.rows.size());
    log.rows.push_back(row);

    for (int v : members[b]) {
      label[v] = a;
      members[a].push_back(v);
    }
    members[b].clear();
  }
  log.validate();
  return log;
}

VerificationReport exhaustive_hcc_bound_check(int max_n, int orders_per_graph,
                                              std::uint64_t seed) {
  require(max_n >= 2 && max_n <= 6, "exhaustive_hcc_bound_check: max_n must be in [2,6]");
  VerificationReport report;
  report.property = "disagreement_within_4x_bad_triangles";
  report.instance =
      "all graphs on 2.." + std::to_string(max_n) + " vertices, sampled insertion orders";

  HccTriangle engine;
  for (int n = 2; n <= max_n; ++n) {
    // pair indexing for this n
    std::vector<std::pair<int, int>> all_pairs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) all_pairs.emplace_back(i, j);
    const int k = static_cast<int>(all_pairs.size());
    std::vector<std::array<int, 3>> triple_pairs;  // pair indices per triple
    {
      auto pair_index = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (int t = 0; t < k; ++t)
          if (all_pairs[t] == std::make_pair(i, j)) return t;
        return -1;
      };
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
          for (int z = y + 1; z < n; ++z)
            triple_pairs.push_back(
                {pair_index(x, y), pair_index(y, z), pair_index(x, z)});
    }

    std::uint64_t factorial = 1;
    for (int graph_bits = 0; graph_bits < (1 << k); ++graph_bits) {
      std::vector<int> edge_ids;
      for (int t = 0; t < k; ++t)
        if (graph_bits >> t & 1) edge_ids.push_back(t);
      const int m = static_cast<int>(edge_ids.size());

      factorial = 1;
      for (int i = 2; i <= m; ++i) factorial *= i;
      const bool all_orders = factorial <= 5040;
      const int rounds = all_orders ? static_cast<int>(factorial) : orders_per_graph;

      std::sort(edge_ids.begin(), edge_ids.end());
      Rng rng(seed ^ (static_cast<std::uint64_t>(n) << 32) ^ graph_bits);
      for (int round = 0; round < rounds; ++round) {
        if (!all_orders) {
          rng.shuffle(edge_ids);
        } else if (round > 0 && !std::next_permutation(edge_ids.begin(), edge_ids.end())) {
          break;
        }

        EdgeOrdering order;
        order.n = n;
        order.pairs.reserve(k);
        std::vector<std::uint8_t> in_graph(k, 0);
        for (int id : edge_ids) {
          order.pairs.push_back(all_pairs[id]);
          in_graph[id] = 1;
        }
        for (int t = 0; t < k; ++t)
          if (!in_graph[t]) order.pairs.push_back(all_pairs[t]);  // padding beyond step m

        const MergeLog log = engine.run(order);
        const PartitionView view(log);

        // Recount everything from scratch at every prefix of the graph edges.
        std::vector<int> label(n);
        std::uint32_t edge_mask = 0;
        for (int t = 0; t <= m; ++t) {
          if (t > 0) edge_mask |= 1u << edge_ids[t - 1];
          for (int v = 0; v < n; ++v) label[v] = view.cluster_of(v, t);

          std::uint32_t partition_mask = 0;
          for (int p = 0; p < k; ++p)
            if (label[all_pairs[p].first] == label[all_pairs[p].second]) partition_mask |= 1u << p;

          const int disagreement = std::popcount(edge_mask ^ partition_mask);
          int bad = 0;
          for (const auto& tp : triple_pairs) {
            const int present = (edge_mask >> tp[0] & 1) + (edge_mask >> tp[1] & 1) +
                                (edge_mask >> tp[2] & 1);
            if (present == 2) ++bad;
          }
          if (disagreement > 4 * bad) {
            report.pass = false;
            std::ostringstream w;
            w << "n=" << n << " graph=0x" << std::hex << graph_bits << std::dec << " step=" << t
              << " disagreement=" << disagreement << " bad_triangles=" << bad;
            report.witness = w.str();
            return report;
          }
        }
      }
    }
  }
  return report;
}

TightnessCertificate tightness_certificate(int n) {
  require(n >= 3, "tightness_certificate: need at least three points");
  TightnessCertificate cert;
  cert.instance = DistanceMatrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) cert.instance.set(i, j, 2.0);
  cert.instance.set(0, 1, 1.0);
  cert.instance.set(0, 2, 1.0);

  double total = 0.0;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) total += tp_by_enumeration(cert.instance, x, y, z);
  cert.delta_l1 = total;
  // Any ultrametric u has max(u(0,1), u(0,2)) >= u(1,2); walking the three
  // error terms against (1, 1, 2) forces |e01| + |e02| + |e12| >= 1.
  cert.min_ultrametric_error = 1.0;
  return cert;
}

}  // namespace treefit::oracle
