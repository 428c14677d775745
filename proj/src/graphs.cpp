#include "treefit/graphs.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "treefit/io.hpp"
#include "treefit/rng.hpp"

namespace treefit {

namespace {

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

bool Graph::unit_weights() const {
  return std::all_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight == 1.0; });
}

void Graph::validate() const {
  require(n >= 0, "Graph: negative vertex count");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    require(e.u >= 0 && e.u < n && e.v >= 0 && e.v < n, "Graph: vertex out of range");
    require(e.u != e.v, "Graph: self-loop");
    require(e.weight > 0.0, "Graph: nonpositive edge weight");
    require(seen.insert(pair_key(e.u, e.v)).second, "Graph: duplicate edge");
  }
}

Graph parse_edge_list(std::string_view text) {
  Graph g;
  std::unordered_map<std::string, int> label_of;
  auto intern = [&](const std::string& token) {
    const auto [it, inserted] = label_of.try_emplace(token, g.n);
    if (inserted) ++g.n;
    return it->second;
  };

  std::istringstream stream{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find_first_not_of(" \t\r");
    if (hash == std::string::npos || line[hash] == '#') continue;
    std::istringstream ss(line);
    std::string a, b, w, extra;
    ss >> a >> b;
    if (b.empty()) fail("edge list: malformed line " + std::to_string(line_no));
    Graph::Edge e;
    if (ss >> w) {
      double weight = 0.0;
      const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (ec != std::errc{} || ptr != w.data() + w.size())
        fail("edge list: bad weight on line " + std::to_string(line_no));
      require(weight > 0.0, "edge list: nonpositive weight on line " + std::to_string(line_no));
      e.weight = weight;
    }
    if (ss >> extra) fail("edge list: trailing tokens on line " + std::to_string(line_no));
    e.u = intern(a);
    e.v = intern(b);
    require(e.u != e.v, "edge list: self-loop on line " + std::to_string(line_no));
    g.edges.push_back(e);
  }
  g.validate();  // catches duplicates
  return g;
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  const bool unit = g.unit_weights();
  for (const auto& e : g.edges) {
    out += std::to_string(e.u) + ' ' + std::to_string(e.v);
    if (!unit) out += ' ' + io::format_double(e.weight);
    out += '\n';
  }
  return out;
}

Graph largest_component(const Graph& g) {
  g.validate();
  require(g.n > 0, "largest_component: empty graph");
  std::vector<int> comp(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = count;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u : adj[v])
        if (comp[u] == -1) {
          comp[u] = count;
          stack.push_back(u);
        }
    }
    ++count;
  }
  std::vector<int> size(count, 0);
  for (int v = 0; v < g.n; ++v) ++size[comp[v]];
  // argmax; earlier component id wins ties, i.e. the one holding the
  // smallest original label
  int best = 0;
  for (int c = 1; c < count; ++c)
    if (size[c] > size[best]) best = c;

  std::vector<int> relabel(g.n, -1);
  Graph out;
  for (int v = 0; v < g.n; ++v)
    if (comp[v] == best) relabel[v] = out.n++;
  for (const auto& e : g.edges)
    if (comp[e.u] == best) out.edges.push_back({relabel[e.u], relabel[e.v], e.weight});
  return out;
}

DistanceMatrix shortest_path_matrix(const Graph& g) {
  g.validate();
  require(g.n > 0, "shortest_path_matrix: empty graph");
  std::vector<std::vector<std::pair<int, double>>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  DistanceMatrix d(g.n);
  const bool unit = g.unit_weights();
  std::vector<double> dist(g.n);

  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1.0);
    if (unit) {
      std::vector<int> queue{s};
      dist[s] = 0.0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (const auto& [u, w] : adj[v])
          if (dist[u] < 0.0) {
            dist[u] = dist[v] + 1.0;
            queue.push_back(u);
          }
      }
    } else {
      using Item = std::pair<double, int>;
      std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
      heap.emplace(0.0, s);
      std::vector<std::uint8_t> done(g.n, 0);
      dist[s] = 0.0;
      while (!heap.empty()) {
        const auto [dv, v] = heap.top();
        heap.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (const auto& [u, w] : adj[v])
          if (!done[u] && (dist[u] < 0.0 || dv + w < dist[u])) {
            dist[u] = dv + w;
            heap.emplace(dist[u], u);
          }
      }
    }
    for (int v = 0; v < g.n; ++v) {
      require(dist[v] >= 0.0, "shortest_path_matrix: graph is disconnected");
      d.set(s, v, v == s ? 0.0 : dist[v]);
    }
  }
  return d;
}

Graph balanced_tree(int branching, int height) {
  require(branching >= 2, "balanced_tree: branching factor must be >= 2");
  require(height >= 1, "balanced_tree: height must be >= 1");
  // n = (r^(h+1) - 1) / (r - 1), guarded against overflow
  std::uint64_t n = 1, layer = 1;
  for (int level = 0; level < height; ++level) {
    layer *= static_cast<std::uint64_t>(branching);
    n += layer;
    require(n <= 20'000'000ull, "balanced_tree: too many nodes");
  }
  Graph g;
  g.n = static_cast<int>(n);
  g.edges.reserve(n - 1);
  // level-order numbering: children of i are r*i+1 .. r*i+r
  for (std::uint64_t child = 1; child < n; ++child) {
    const std::uint64_t parent = (child - 1) / static_cast<std::uint64_t>(branching);
    g.edges.push_back({static_cast<int>(parent), static_cast<int>(child), 1.0});
  }
  return g;
}

Graph perturb_tree(const Graph& tree, const SyntheticSpec& spec) {
  tree.validate();
  require(static_cast<int>(tree.edges.size()) == tree.n - 1,
          "perturb_tree: input must be a tree");
  require(spec.n_extra_edges >= 0, "perturb_tree: negative edge budget");
  require(spec.delta > 0.0, "perturb_tree: delta must be positive");

  Graph out = tree;
  if (spec.n_extra_edges == 0) return out;

  // Distances in the original tree drive both eligibility and the new
  // weights; shortest_path_matrix also rejects disconnected input.
  const DistanceMatrix base = shortest_path_matrix(tree);

  std::unordered_set<std::uint64_t> present;
  present.reserve(tree.edges.size() + spec.n_extra_edges);
  for (const auto& e : tree.edges) present.insert(pair_key(e.u, e.v));

  std::int64_t eligible = 0;
  for (int u = 0; u < tree.n; ++u)
    for (int v = u + 1; v < tree.n; ++v)
      if (base(u, v) > 2.0 && base(u, v) - 2.0 * spec.delta > 0.0 &&
          !present.contains(pair_key(u, v)))
        ++eligible;
  require(eligible > 0, "perturb_tree: tree admits no eligible vertex pair");
  require(eligible >= spec.n_extra_edges,
          "perturb_tree: edge budget exceeds the number of eligible pairs");

  Rng rng(spec.seed);
  constexpr int kMaxAttemptsPerEdge = 1'000'000;
  for (int added = 0; added < spec.n_extra_edges; ++added) {
    int attempts = 0;
    for (;;) {
      require(++attempts <= kMaxAttemptsPerEdge, "perturb_tree: sampling stalled");
      const auto [u, v] = rng.distinct_pair(tree.n);
      const double duv = base(u, v);
      if (duv <= 2.0) continue;
      const double weight = duv - 2.0 * spec.delta;
      if (weight <= 0.0) continue;
      if (!present.insert(pair_key(u, v)).second) continue;
      out.edges.push_back({std::min(u, v), std::max(u, v), weight});
      break;
    }
  }
  return out;
}

}  // namespace treefit
