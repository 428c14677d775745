#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "treefit/distance_matrix.hpp"

namespace treefit {

/// Simple undirected graph with positive edge weights (1 when unweighted).
struct Graph {
  int n = 0;
  struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
  };
  std::vector<Edge> edges;

  bool unit_weights() const;
  void validate() const;  // no self-loops, no duplicates, weights > 0
};

/// Parses whitespace-separated `u v [w]` lines. Labels are arbitrary tokens,
/// relabeled densely in first-appearance order. Blank lines and lines
/// starting with '#' are skipped. Throws on malformed lines, self-loops,
/// duplicate edges, and nonpositive weights.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

/// Induced subgraph on the largest connected component (ties: the component
/// containing the smallest original label), relabeled densely in ascending
/// original order.
Graph largest_component(const Graph& g);

/// All-pairs shortest paths: BFS per source on unit weights, binary-heap
/// Dijkstra per source otherwise. Throws on disconnected input.
DistanceMatrix shortest_path_matrix(const Graph& g);

/// Complete r-ary tree of the given height with unit edges, apex at node 0.
/// n = (r^(h+1) - 1) / (r - 1).
Graph balanced_tree(int branching, int height);

struct SyntheticSpec {
  std::string base;              // generator id ("bt:r:h") or a file path; CLI-level
  int n_extra_edges = 500;
  double delta = 0.1;
  std::uint64_t seed = 0;
};

/// Adds n_extra_edges shortcut edges to a tree: repeatedly samples vertex
/// pairs uniformly with the seeded generator, rejects pairs at tree distance
/// <= 2 (and already-present edges), and inserts edge (v,w) with weight
/// d_T(v,w) - 2*delta. Distances are measured in the original tree. Throws
/// if the tree admits no eligible pair or the edge budget cannot be met.
Graph perturb_tree(const Graph& tree, const SyntheticSpec& spec);

}  // namespace treefit
