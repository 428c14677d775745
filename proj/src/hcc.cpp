#include "treefit/hcc.hpp"

#include <algorithm>
#include <numeric>

namespace treefit {

EdgeOrdering EdgeOrdering::sorted_by_distance(const DistanceMatrix& d) {
  EdgeOrdering order;
  order.n = d.size();
  order.pairs.reserve(d.pair_count());
  for (int i = 0; i < order.n; ++i)
    for (int j = i + 1; j < order.n; ++j) order.pairs.emplace_back(i, j);
  std::stable_sort(order.pairs.begin(), order.pairs.end(),
                   [&d](const auto& a, const auto& b) {
                     return d(a.first, a.second) < d(b.first, b.second);
                   });
  order.weights.reserve(order.pairs.size());
  for (const auto& [i, j] : order.pairs) order.weights.push_back(d(i, j));
  return order;
}

void EdgeOrdering::validate() const {
  require(n >= 0, "EdgeOrdering: negative n");
  const std::uint64_t k = choose2(static_cast<std::uint64_t>(n));
  require(pairs.size() == k, "EdgeOrdering: wrong pair count");
  require(weights.empty() || weights.size() == pairs.size(),
          "EdgeOrdering: weights length mismatch");
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(n) * n, 0);
  for (const auto& [i, j] : pairs) {
    require(i >= 0 && i < n && j >= 0 && j < n && i != j, "EdgeOrdering: bad pair");
    const int a = std::min(i, j), b = std::max(i, j);
    auto& flag = seen[static_cast<std::size_t>(a) * n + b];
    require(!flag, "EdgeOrdering: duplicate pair");
    flag = 1;
  }
  for (std::size_t t = 1; t < weights.size(); ++t)
    require(weights[t - 1] <= weights[t], "EdgeOrdering: weights must be nondecreasing");
}

void MergeLog::validate() const {
  require(n >= 0, "MergeLog: negative n");
  const int ids = 2 * n - 1;
  std::vector<std::uint8_t> used(std::max(ids, 0), 0);
  std::vector<int> size_of(std::max(ids, 0), 1);
  double prev_height = rows.empty() ? 0.0 : rows.front().height;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const MergeRow& r = rows[t];
    const int self = n + static_cast<int>(t);
    require(self < ids, "MergeLog: too many rows");
    for (int child : {r.id_a, r.id_b}) {
      require(child >= 0 && child < self, "MergeLog: child id out of range");
      require(!used[child], "MergeLog: child appears twice");
      used[child] = 1;
    }
    size_of[self] = size_of[r.id_a] + size_of[r.id_b];
    require(r.size == size_of[self], "MergeLog: size mismatch");
    require(r.height >= prev_height, "MergeLog: heights must be nondecreasing");
    prev_height = r.height;
  }
  if (!rows.empty())
    require(rows.back().size == n, "MergeLog: final row must cover all leaves");
}

MergeLog hcc_triangle(const EdgeOrdering& order) { return HccTriangle().run(order); }

int HccTriangle::find(int v) {
  int root = v;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[v] != root) {
    const int up = parent_[v];
    parent_[v] = root;
    v = up;
  }
  return root;
}

void HccTriangle::merge_clusters(int a, int b, std::int64_t step, double height,
                                 MergeLog& log) {
  const int n = n_;
  const int keep = cluster_size_[a] >= cluster_size_[b] ? a : b;
  const int drop = keep == a ? b : a;

  MergeRow row;
  row.id_a = std::min(cluster_id_[a], cluster_id_[b]);
  row.id_b = std::max(cluster_id_[a], cluster_id_[b]);
  row.step = step;
  row.height = height;
  row.size = cluster_size_[a] + cluster_size_[b];
  cluster_id_[keep] = n + static_cast<int>(log.rows.size());
  log.rows.push_back(row);

  // M(new, :) = M(a, :) + M(b, :) -- membership of x in the merged cluster
  // does not change H(x, C) for other clusters C.
  {
    std::int32_t* mk = connected_.data() + static_cast<std::size_t>(keep) * n;
    const std::int32_t* md = connected_.data() + static_cast<std::size_t>(drop) * n;
    for (int c = 0; c < n; ++c) mk[c] += md[c];
  }
  // D(:, new) = D(:, a) + D(:, b)
  for (int x = 0; x < n; ++x)
    deg_[static_cast<std::size_t>(x) * n + keep] += deg_[static_cast<std::size_t>(x) * n + drop];

  parent_[drop] = keep;
  cluster_size_[keep] = row.size;

  // Rebuild H(:, new) against the new size and recount M(:, new).
  std::fill(column_buf_.begin(), column_buf_.end(), 0);
  for (int x = 0; x < n; ++x) {
    const bool h = 2 * deg_[static_cast<std::size_t>(x) * n + keep] >= cluster_size_[keep];
    half_[static_cast<std::size_t>(x) * n + keep] = h;
    if (h) ++column_buf_[find(x)];
  }
  for (int c = 0; c < n; ++c) connected_[static_cast<std::size_t>(c) * n + keep] = column_buf_[c];
}

MergeLog HccTriangle::run(const EdgeOrdering& order) {
  order.validate();
  const int n = n_ = order.n;
  MergeLog log;
  log.n = n;
  if (n <= 1) return log;
  log.rows.reserve(n - 1);

  parent_.resize(n);
  std::iota(parent_.begin(), parent_.end(), 0);
  cluster_size_.assign(n, 1);
  cluster_id_.resize(n);
  std::iota(cluster_id_.begin(), cluster_id_.end(), 0);
  deg_.assign(static_cast<std::size_t>(n) * n, 0);
  half_.assign(static_cast<std::size_t>(n) * n, 0);
  connected_.assign(static_cast<std::size_t>(n) * n, 0);
  column_buf_.assign(n, 0);

  const bool weighted = order.weighted();
  for (std::size_t t = 0; t < order.pairs.size(); ++t) {
    const auto [x, y] = order.pairs[t];
    const int a = find(x), b = find(y);

    // D(x, C_y) and D(y, C_x) gain the new edge; H flips at most 0 -> 1
    // between merges since sizes are fixed.
    auto bump = [&](int vertex, int vertex_root, int cluster) {
      const std::size_t at = static_cast<std::size_t>(vertex) * n + cluster;
      ++deg_[at];
      if (!half_[at] && 2 * deg_[at] >= cluster_size_[cluster]) {
        half_[at] = 1;
        ++connected_[static_cast<std::size_t>(vertex_root) * n + cluster];
      }
    };
    bump(x, a, b);
    bump(y, b, a);

    if (a != b &&
        connected_[static_cast<std::size_t>(a) * n + b] +
                connected_[static_cast<std::size_t>(b) * n + a] ==
            cluster_size_[a] + cluster_size_[b]) {
      const double height = weighted ? order.weights[t] : static_cast<double>(t + 1);
      merge_clusters(a, b, static_cast<std::int64_t>(t + 1), height, log);
    }
  }

  // A complete ordering always ends in a single cluster.
  if (static_cast<int>(log.rows.size()) != n - 1)
    throw std::logic_error("HccTriangle: ordering did not collapse to one cluster");
  return log;
}

PartitionView::PartitionView(const MergeLog& log) {
  log.validate();
  n_ = log.n;
  const int ids = std::max(2 * n_ - 1, n_);
  parent_.assign(ids, -1);
  step_.assign(ids, 0);
  for (std::size_t t = 0; t < log.rows.size(); ++t) {
    const int self = n_ + static_cast<int>(t);
    parent_[log.rows[t].id_a] = self;
    parent_[log.rows[t].id_b] = self;
    step_[self] = log.rows[t].step;
  }
}

int PartitionView::cluster_of(int v, std::int64_t step) const {
  require(v >= 0 && v < n_, "PartitionView: vertex out of range");
  require(step >= 0 && step <= static_cast<std::int64_t>(choose2(static_cast<std::uint64_t>(n_))),
          "PartitionView: step out of range");
  int id = v;
  while (parent_[id] != -1 && step_[parent_[id]] <= step) id = parent_[id];
  return id;
}

std::vector<std::vector<int>> PartitionView::clusters_at(std::int64_t step) const {
  std::vector<std::vector<int>> by_smallest(n_);
  std::vector<int> smallest(std::max(2 * n_ - 1, n_), -1);
  for (int v = 0; v < n_; ++v) {
    const int c = cluster_of(v, step);
    if (smallest[c] == -1) smallest[c] = v;
    by_smallest[smallest[c]].push_back(v);
  }
  std::vector<std::vector<int>> out;
  for (auto& cluster : by_smallest)
    if (!cluster.empty()) out.push_back(std::move(cluster));
  return out;
}

std::vector<std::vector<int>> partition_at(const MergeLog& log, std::int64_t step) {
  return PartitionView(log).clusters_at(step);
}

}  // namespace treefit
