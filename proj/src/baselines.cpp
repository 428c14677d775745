#include "treefit/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace treefit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Ultrametric single_linkage_ultrametric(const DistanceMatrix& d) {
  d.validate();
  const int n = d.size();
  require(n >= 1, "single_linkage_ultrametric: empty input");

  Ultrametric out;
  out.linkage.n = n;
  if (n == 1) {
    out.values = DistanceMatrix(1);
    return out;
  }

  // Cluster distances on slots 0..n-1 with per-slot nearest neighbors. After
  // a min-linkage merge a row's nearest distance never changes value, only
  // possibly its pointer, so the whole run is O(n^2).
  std::vector<double> work(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) work[static_cast<std::size_t>(i) * n + j] = d(i, j);
  std::vector<std::uint8_t> active(n, 1);
  std::vector<int> nearest(n, -1), cluster_id(n);
  std::vector<double> nearest_dist(n, 0.0);
  std::iota(cluster_id.begin(), cluster_id.end(), 0);

  auto rescan = [&](int i) {
    nearest[i] = -1;
    nearest_dist[i] = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
      if (j == i || !active[j]) continue;
      const double v = work[static_cast<std::size_t>(i) * n + j];
      if (v < nearest_dist[i]) {
        nearest_dist[i] = v;
        nearest[i] = j;
      }
    }
  };
  for (int i = 0; i < n; ++i) rescan(i);

  out.linkage.rows.reserve(n - 1);
  for (int round = 0; round < n - 1; ++round) {
    int i = -1;
    for (int c = 0; c < n; ++c)
      if (active[c] && (i == -1 || nearest_dist[c] < nearest_dist[i])) i = c;
    int j = nearest[i];
    if (j < i) std::swap(i, j);

    MergeRow row;
    row.id_a = std::min(cluster_id[i], cluster_id[j]);
    row.id_b = std::max(cluster_id[i], cluster_id[j]);
    row.step = round + 1;
    row.height = work[static_cast<std::size_t>(i) * n + j];
    row.size = 0;  // filled below
    cluster_id[i] = n + round;
    active[j] = 0;

    for (int k = 0; k < n; ++k) {
      if (!active[k] || k == i) continue;
      const double merged = std::min(work[static_cast<std::size_t>(i) * n + k],
                                     work[static_cast<std::size_t>(j) * n + k]);
      work[static_cast<std::size_t>(i) * n + k] = merged;
      work[static_cast<std::size_t>(k) * n + i] = merged;
      if (nearest[k] == i || nearest[k] == j) {
        nearest[k] = i;
        nearest_dist[k] = merged;
      }
    }
    rescan(i);
    out.linkage.rows.push_back(row);
  }

  // Sizes from the child ids.
  std::vector<int> size_of(2 * n - 1, 1);
  for (std::size_t t = 0; t < out.linkage.rows.size(); ++t) {
    auto& row = out.linkage.rows[t];
    row.size = size_of[row.id_a] + size_of[row.id_b];
    size_of[n + t] = row.size;
  }
  out.linkage.validate();

  out.values = ultrametric_from_merge_log(out.linkage);
  return out;
}

TreeFitResult gromov_tree_fit(const DistanceMatrix& d, int base) {
  d.validate();
  const int n = d.size();
  require(base >= 0 && base < n, "gromov_tree_fit: invalid base point");

  const auto t0 = Clock::now();
  const ReductionContext ctx = ReductionContext::around(d, base);
  const Ultrametric raw = single_linkage_ultrametric(ctx.reduced(d));
  // Single linkage never stretches, so the lower clamp can fire; the input
  // here is an ultrametric by construction.
  const DistanceMatrix clipped =
      restrict_reduced_ultrametric(raw.values, ctx, /*validate_input=*/false);

  DistanceMatrix fitted(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == base || y == base) {
        const int other = x == base ? y : x;
        const double mapped = clipped(x, y) - ctx.offset(x, y);
        if (std::abs(mapped - d(base, other)) > kTol)
          throw std::logic_error("gromov_tree_fit: base row not preserved");
        fitted.set(x, y, d(base, other));
      } else {
        fitted.set(x, y, clipped(x, y) - ctx.offset(x, y));
      }
    }

  // Single linkage reproduces an ultrametric exactly, which gives a linkage
  // for the clipped values to realize as a tree.
  TreeFitResult result;
  result.tree = construct_rooted_tree(single_linkage_ultrametric(clipped).linkage, ctx);
  const double elapsed = seconds_since(t0);
  result.fitted = std::move(fitted);
  result.report = make_fit_report("gromov", d, result.fitted, elapsed, base);
  return result;
}

TreeFitResult neighbor_join(const DistanceMatrix& d) {
  d.validate();
  const int n = d.size();
  require(n >= 1, "neighbor_join: empty input");

  const auto t0 = Clock::now();
  WeightedTree tree;
  tree.n_points = n;

  if (n == 1) {
    tree.node_count = 1;
  } else if (n == 2) {
    tree.node_count = 2;
    tree.edges.push_back({0, 1, d(0, 1)});
  } else {
    std::vector<double> work(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) work[static_cast<std::size_t>(i) * n + j] = d(i, j);
    std::vector<int> slots(n), node_of(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::iota(node_of.begin(), node_of.end(), 0);
    int next_node = n;
    auto w = [&](int a, int b) -> double& { return work[static_cast<std::size_t>(a) * n + b]; };

    int m = n;
    std::vector<double> sum(n, 0.0);
    while (m > 3) {
      for (int ia = 0; ia < m; ++ia) {
        double s = 0.0;
        for (int ib = 0; ib < m; ++ib)
          if (ib != ia) s += w(slots[ia], slots[ib]);
        sum[slots[ia]] = s;
      }
      int best_a = 0, best_b = 1;
      double best_q = std::numeric_limits<double>::infinity();
      for (int ia = 0; ia < m; ++ia)
        for (int ib = ia + 1; ib < m; ++ib) {
          const double q =
              (m - 2) * w(slots[ia], slots[ib]) - sum[slots[ia]] - sum[slots[ib]];
          if (q < best_q) {
            best_q = q;
            best_a = ia;
            best_b = ib;
          }
        }
      const int i = slots[best_a], j = slots[best_b];
      const double dij = w(i, j);
      const double delta_i = 0.5 * dij + (sum[i] - sum[j]) / (2.0 * (m - 2));
      const double delta_j = dij - delta_i;
      const int u = next_node++;
      tree.edges.push_back({node_of[i], u, delta_i});
      tree.edges.push_back({node_of[j], u, delta_j});
      for (int ic = 0; ic < m; ++ic) {
        const int k = slots[ic];
        if (k == i || k == j) continue;
        const double v = 0.5 * (w(i, k) + w(j, k) - dij);
        w(i, k) = v;
        w(k, i) = v;
      }
      node_of[i] = u;
      slots.erase(slots.begin() + best_b);
      --m;
    }

    // Final star over the last three taxa.
    const int a = slots[0], b = slots[1], c = slots[2];
    const int u = next_node++;
    tree.edges.push_back({node_of[a], u, 0.5 * (w(a, b) + w(a, c) - w(b, c))});
    tree.edges.push_back({node_of[b], u, 0.5 * (w(a, b) + w(b, c) - w(a, c))});
    tree.edges.push_back({node_of[c], u, 0.5 * (w(a, c) + w(b, c) - w(a, b))});
    tree.node_count = next_node;
  }

  TreeFitResult result;
  for (auto& e : tree.edges)
    if (e.weight < 0.0) {
      e.weight = 0.0;
      ++result.clamped_edges;
    }
  result.tree = std::move(tree);
  result.fitted = tree_path_metric(result.tree);
  const double elapsed = seconds_since(t0);
  result.report = make_fit_report("nj", d, result.fitted, elapsed);
  return result;
}

}  // namespace treefit
