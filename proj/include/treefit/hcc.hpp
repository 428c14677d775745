#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "treefit/common.hpp"
#include "treefit/distance_matrix.hpp"

namespace treefit {

/// An ordering e_1 .. e_k of all C(n,2) unordered pairs, optionally with
/// nondecreasing weights d(e_1) <= ... <= d(e_k). E_t denotes the prefix
/// {e_1, ..., e_t}.
struct EdgeOrdering {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // permutation of the full pair set
  std::vector<double> weights;             // empty, or parallel and nondecreasing

  bool weighted() const { return !weights.empty(); }

  /// All pairs of d sorted by nondecreasing distance, ties broken
  /// lexicographically by (i, j).
  static EdgeOrdering sorted_by_distance(const DistanceMatrix& d);

  /// Throws if pairs is not a permutation of the full pair set or weights
  /// are malformed.
  void validate() const;
};

/// One agglomerative merge: children id_a < id_b, the ordering step t at
/// which it happened, the merge height, and the size of the new cluster.
/// Row tau (0-based) creates cluster id n + tau; leaves are ids 0 .. n-1.
struct MergeRow {
  int id_a = 0;
  int id_b = 0;
  std::int64_t step = 0;
  double height = 0.0;
  int size = 0;
};

struct MergeLog {
  int n = 0;
  std::vector<MergeRow> rows;

  void validate() const;
};

/// Reference predicate: X and Y (disjoint, nonempty) are highly connected
/// under `adjacent` iff every x in X has at least |Y|/2 neighbors in Y and
/// every y in Y has at least |X|/2 neighbors in X. The comparison is
/// real-valued (2*degree >= |Y|), so odd cluster sizes round nothing.
template <class Adjacent>
bool is_highly_connected(std::span<const int> xs, std::span<const int> ys, Adjacent&& adjacent) {
  require(!xs.empty() && !ys.empty(), "is_highly_connected: clusters must be nonempty");
  for (int x : xs)
    for (int y : ys) require(x != y, "is_highly_connected: clusters overlap");
  for (int x : xs) {
    std::size_t deg = 0;
    for (int y : ys) deg += adjacent(x, y) ? 1 : 0;
    if (2 * deg < ys.size()) return false;
  }
  for (int y : ys) {
    std::size_t deg = 0;
    for (int x : xs) deg += adjacent(y, x) ? 1 : 0;
    if (2 * deg < xs.size()) return false;
  }
  return true;
}

/// Hierarchical correlation clustering with triangle objectives. Processes
/// the ordering once; when e_t joins two distinct clusters that are highly
/// connected under E_t, they merge. Incremental bookkeeping keeps the whole
/// run at O(n^2):
///   D(x,C)   neighbors of x inside cluster C under the processed prefix
///   H(x,C)   whether 2*D(x,C) >= |C|
///   M(A,B)   number of x in A with H(x,B)
/// Disjoint A and B are highly connected iff M(A,B) + M(B,A) = |A| + |B|.
/// Per-edge updates are O(1); each of the n-1 merges rebuilds one row and
/// one column in O(n).
class HccTriangle {
 public:
  /// Runs the engine. Heights are the ordering's weights when present, the
  /// step index otherwise. Exactly n-1 merges result from any complete
  /// ordering.
  MergeLog run(const EdgeOrdering& order);

 private:
  int find(int v);
  void merge_clusters(int a, int b, std::int64_t step, double height, MergeLog& log);

  int n_ = 0;
  std::vector<int> parent_, cluster_size_, cluster_id_;
  std::vector<std::int32_t> deg_;       // D, vertex-major n*n
  std::vector<std::uint8_t> half_;      // H, vertex-major n*n
  std::vector<std::int32_t> connected_; // M, cluster-major n*n
  std::vector<std::int32_t> column_buf_;
};

/// One-shot convenience wrapper around HccTriangle.
MergeLog hcc_triangle(const EdgeOrdering& order);

/// Answers cluster membership questions for every prefix step of the
/// ordering a MergeLog was produced from. The partition at step t refines
/// the partition at any later step.
class PartitionView {
 public:
  explicit PartitionView(const MergeLog& log);

  /// Merge-log id of the cluster containing v after e_1 .. e_step.
  int cluster_of(int v, std::int64_t step) const;

  bool together(int u, int v, std::int64_t step) const {
    return cluster_of(u, step) == cluster_of(v, step);
  }

  /// Clusters at the given step, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> clusters_at(std::int64_t step) const;

  int leaf_count() const { return n_; }

 private:
  int n_ = 0;
  std::vector<int> parent_;          // parent log id, -1 at the top
  std::vector<std::int64_t> step_;   // creation step per log id (0 for leaves)
};

/// Snapshot of the hierarchical partition after processing e_1 .. e_step.
std::vector<std::vector<int>> partition_at(const MergeLog& log, std::int64_t step);

}  // namespace treefit
