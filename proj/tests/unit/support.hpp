#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "treefit/distance_matrix.hpp"
#include "treefit/graphs.hpp"
#include "treefit/rng.hpp"
#include "treefit/tree.hpp"

namespace treefit::testing {

// Six-point fixture with a known ultrametric fit (merges at 3, 4, 6, 7, 8).
inline DistanceMatrix six_point_example() {
  return DistanceMatrix::from_rows({
      {0, 3, 5, 6, 8, 8},
      {3, 0, 7, 8, 7, 10},
      {5, 7, 0, 9, 5, 7},
      {6, 8, 9, 0, 4, 5},
      {8, 7, 5, 4, 0, 6},
      {8, 10, 7, 5, 6, 0},
  });
}

inline DistanceMatrix six_point_expected_ultrametric() {
  return DistanceMatrix::from_rows({
      {0, 3, 7, 8, 8, 8},
      {3, 0, 7, 8, 8, 8},
      {7, 7, 0, 8, 8, 8},
      {8, 8, 8, 0, 4, 6},
      {8, 8, 8, 4, 0, 6},
      {8, 8, 8, 6, 6, 0},
  });
}

// Seven-point fixture whose base point 0 has radius 10; its reduction
// reproduces the six-point fixture on points 1..6.
inline DistanceMatrix rooted_seven_point_example() {
  return DistanceMatrix::from_rows({
      {0, 9, 9, 8, 10, 8, 7},
      {9, 0, 1, 2, 5, 5, 4},
      {9, 1, 0, 4, 7, 4, 6},
      {8, 2, 4, 0, 7, 1, 2},
      {10, 5, 7, 7, 0, 2, 2},
      {8, 5, 4, 1, 2, 0, 1},
      {7, 4, 6, 2, 2, 1, 0},
  });
}

inline DistanceMatrix rooted_seven_point_expected_offsets() {
  return DistanceMatrix::from_rows({
      {0, 11, 11, 12, 10, 12, 13},
      {11, 0, 2, 3, 1, 3, 4},
      {11, 2, 0, 3, 1, 3, 4},
      {12, 3, 3, 0, 2, 4, 5},
      {10, 1, 1, 2, 0, 2, 3},
      {12, 3, 3, 4, 2, 0, 5},
      {13, 4, 4, 5, 3, 5, 0},
  });
}

inline DistanceMatrix rooted_seven_point_expected_reduced() {
  return DistanceMatrix::from_rows({
      {0, 20, 20, 20, 20, 20, 20},
      {20, 0, 3, 5, 6, 8, 8},
      {20, 3, 0, 7, 8, 7, 10},
      {20, 5, 7, 0, 9, 5, 7},
      {20, 6, 8, 9, 0, 4, 5},
      {20, 8, 7, 5, 4, 0, 6},
      {20, 8, 10, 7, 5, 6, 0},
  });
}

inline DistanceMatrix rooted_seven_point_expected_ultrametric() {
  return DistanceMatrix::from_rows({
      {0, 20, 20, 20, 20, 20, 20},
      {20, 0, 3, 7, 8, 8, 8},
      {20, 3, 0, 7, 8, 8, 8},
      {20, 7, 7, 0, 8, 8, 8},
      {20, 8, 8, 8, 0, 4, 6},
      {20, 8, 8, 8, 4, 0, 6},
      {20, 8, 8, 8, 6, 6, 0},
  });
}

inline DistanceMatrix rooted_seven_point_expected_tree_metric() {
  return DistanceMatrix::from_rows({
      {0, 9, 9, 8, 10, 8, 7},
      {9, 0, 1, 4, 7, 5, 4},
      {9, 1, 0, 4, 7, 5, 4},
      {8, 4, 4, 0, 6, 4, 3},
      {10, 7, 7, 6, 0, 2, 3},
      {8, 5, 5, 4, 2, 0, 1},
      {7, 4, 4, 3, 3, 1, 0},
  });
}

// Uniform points in the unit square; Euclidean distances are always a metric.
inline DistanceMatrix random_euclidean_metric(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {rng.unit(), rng.unit()};
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = pts[i].first - pts[j].first, dy = pts[i].second - pts[j].second;
      d.set(i, j, std::sqrt(dx * dx + dy * dy));
    }
  return d;
}

// Integer metric: shortest paths of a random connected unit-weight graph.
inline DistanceMatrix random_graph_metric(int n, std::uint64_t seed, double extra_edge_rate = 0.3) {
  Rng rng(seed);
  Graph g;
  g.n = n;
  std::vector<std::uint8_t> present(static_cast<std::size_t>(n) * n, 0);
  auto add = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    if (u == v || present[static_cast<std::size_t>(u) * n + v]) return;
    present[static_cast<std::size_t>(u) * n + v] = 1;
    g.edges.push_back({u, v, 1.0});
  };
  for (int v = 1; v < n; ++v) add(rng.index(v), v);  // random spanning tree
  const int extra = static_cast<int>(extra_edge_rate * n);
  for (int i = 0; i < extra; ++i) {
    const auto [u, v] = rng.distinct_pair(n);
    add(u, v);
  }
  return shortest_path_matrix(g);
}

// Symmetric nonnegative values with zero diagonal; generally not a metric.
inline DistanceMatrix random_dissimilarity(int n, std::uint64_t seed, double hi = 10.0) {
  Rng rng(seed);
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d.set(i, j, rng.range(0.0, hi));
  return d;
}

// Random binary-ish tree whose original points are the leaves; built by
// subdividing a random edge per new leaf. Weights in [0.5, 2].
inline WeightedTree random_leaf_tree(int n_leaves, std::uint64_t seed) {
  Rng rng(seed);
  WeightedTree t;
  t.n_points = n_leaves;
  if (n_leaves == 1) {
    t.node_count = 1;
    return t;
  }
  t.node_count = n_leaves;
  auto steiner = [&]() { return t.node_count++; };
  t.edges.push_back({0, 1, rng.range(0.5, 2.0)});
  for (int leaf = 2; leaf < n_leaves; ++leaf) {
    const int pick = rng.index(static_cast<int>(t.edges.size()));
    auto edge = t.edges[pick];
    const int mid = steiner();
    const double split = rng.range(0.25, 0.75) * edge.weight;
    t.edges[pick] = {edge.u, mid, split};
    t.edges.push_back({mid, edge.v, edge.weight - split});
    t.edges.push_back({mid, leaf, rng.range(0.5, 2.0)});
  }
  return t;
}

// Path metric of a random leaf tree: additive by construction.
inline DistanceMatrix random_additive_metric(int n_leaves, std::uint64_t seed) {
  return tree_path_metric(random_leaf_tree(n_leaves, seed));
}

// Alternative route for tree distances: explicit root walk + lowest common
// ancestor depths.
inline DistanceMatrix lca_path_metric(const WeightedTree& t) {
  std::vector<std::vector<std::pair<int, double>>> adj(t.node_count);
  for (const auto& e : t.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<int> parent(t.node_count, -1), order;
  std::vector<double> depth(t.node_count, 0.0);
  std::vector<int> level(t.node_count, 0);
  order.push_back(0);
  std::vector<std::uint8_t> seen(t.node_count, 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    for (const auto& [u, w] : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        depth[u] = depth[v] + w;
        level[u] = level[v] + 1;
        order.push_back(u);
      }
  }
  DistanceMatrix d(t.n_points);
  for (int i = 0; i < t.n_points; ++i)
    for (int j = i + 1; j < t.n_points; ++j) {
      int a = i, b = j;
      while (level[a] > level[b]) a = parent[a];
      while (level[b] > level[a]) b = parent[b];
      while (a != b) {
        a = parent[a];
        b = parent[b];
      }
      d.set(i, j, depth[i] + depth[j] - 2.0 * depth[a]);
    }
  return d;
}

}  // namespace treefit::testing
