#include "treefit/tree.hpp"

#include <vector>

namespace treefit {

namespace {

std::vector<std::vector<std::pair<int, double>>> adjacency(const WeightedTree& t) {
  std::vector<std::vector<std::pair<int, double>>> adj(t.node_count);
  for (const auto& e : t.edges) {
    require(e.u >= 0 && e.u < t.node_count && e.v >= 0 && e.v < t.node_count,
            "WeightedTree: node out of range");
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  return adj;
}

}  // namespace

void WeightedTree::validate() const {
  require(n_points >= 0 && node_count >= n_points, "WeightedTree: bad node counts");
  require(root == -1 || (root >= 0 && root < n_points),
          "WeightedTree: root must be an original point");
  require(static_cast<int>(edges.size()) == std::max(node_count - 1, 0),
          "WeightedTree: edge count must be node_count - 1");
  for (const auto& e : edges) require(e.weight >= 0.0, "WeightedTree: negative edge weight");
  if (node_count == 0) return;
  const auto adj = adjacency(*this);
  std::vector<std::uint8_t> seen(node_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [u, w] : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  require(reached == node_count, "WeightedTree: disconnected");
}

DistanceMatrix tree_path_metric(const WeightedTree& t) {
  t.validate();
  DistanceMatrix d(t.n_points);
  if (t.n_points == 0) return d;
  const auto adj = adjacency(t);
  std::vector<double> dist(t.node_count);
  std::vector<std::uint8_t> seen(t.node_count);
  std::vector<int> stack;
  for (int s = 0; s < t.n_points; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    dist[s] = 0.0;
    seen[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& [u, w] : adj[v])
        if (!seen[u]) {
          seen[u] = 1;
          dist[u] = dist[v] + w;
          stack.push_back(u);
        }
    }
    for (int x = 0; x < t.n_points; ++x) d.set(s, x, x == s ? 0.0 : dist[x]);
  }
  return d;
}

}  // namespace treefit
