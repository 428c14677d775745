#pragma once

#include <vector>

#include "treefit/distance_matrix.hpp"

namespace treefit {

/// Tree on node_count nodes with nonnegative edge weights. Nodes
/// 0 .. n_points-1 are the original points; the rest are Steiner nodes.
/// root is an original point index for rooted fits, -1 when unrooted.
struct WeightedTree {
  int n_points = 0;
  int node_count = 0;
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 0.0;
  };
  std::vector<Edge> edges;
  int root = -1;

  /// Throws unless connected, acyclic, and all weights >= 0.
  void validate() const;
};

/// Pairwise path lengths among the original points, via one traversal per
/// source. O(n_points * node_count). Throws on disconnected input.
DistanceMatrix tree_path_metric(const WeightedTree& t);

}  // namespace treefit
