#pragma once

#include <vector>

#include "treefit/distance_matrix.hpp"
#include "treefit/hcc.hpp"
#include "treefit/report.hpp"
#include "treefit/tree.hpp"

namespace treefit {

/// A distance matrix satisfying the strong triangle inequality, together
/// with the merge sequence it was derived from.
struct Ultrametric {
  DistanceMatrix values;
  MergeLog linkage;
};

/// Affine reduction between rooted tree fitting and ultrametric fitting
/// around a base point w:
///   M        = max_x d(x, w)
///   c_w(x,y) = 2M - d(x,w) - d(y,w)
///   beta_x   = 2(M - d(x,w))
/// so that (d + c_w)(x,y) = 2(M - gp_w(x,y)) and c_w(x,y) = (beta_x+beta_y)/2.
struct ReductionContext {
  int base = 0;
  double radius = 0.0;            // M
  std::vector<double> to_base;    // d(x, w)

  static ReductionContext around(const DistanceMatrix& d, int base);

  double beta(int x) const { return 2.0 * (radius - to_base[x]); }
  double offset(int x, int y) const { return 2.0 * radius - to_base[x] - to_base[y]; }

  /// d + c_w. The base row is set to exactly 2M rather than computed, which
  /// is the same value without rounding residue.
  DistanceMatrix reduced(const DistanceMatrix& d) const;
};

/// Ultrametric fit: sorts all pairs by nondecreasing distance (ties broken
/// lexicographically), clusters with HccTriangle, and reads d_U(x,y) off the
/// height of the first merge that joins x and y. The output satisfies
/// ||d - d_U||_1 <= 4 ||Delta(d)||_1 where Delta(d) is the ultrametricity
/// vector. O(n^2 log n), sort-dominated.
Ultrametric hcc_ultra_fit(const DistanceMatrix& d);

/// Matrix of lowest-common-merge heights: entry (x,y) is the height of the
/// first row joining x and y. O(n^2) over the block products.
DistanceMatrix ultrametric_from_merge_log(const MergeLog& log);

struct TreeFitResult {
  WeightedTree tree;
  DistanceMatrix fitted;
  FitReport report;
  int clamped_edges = 0;  // negative weights zeroed after construction (NJ only)
};

/// Rooted tree fit through the ultrametric reduction: fits d + c_w with
/// hcc_ultra_fit and maps back. The output tree metric preserves the base
/// row exactly and satisfies ||d - d_T||_1 <= 8 ||Delta_w(d)||_1.
/// O(n^2 log n). Expects a metric input.
TreeFitResult hcc_rooted_tree_fit(const DistanceMatrix& d, int base);

/// Clips each entry of an ultrametric fitted to d + c_w into
/// [max(beta_x, beta_y), 2M]. The result is still an ultrametric, its
/// entrywise error against d + c_w does not increase, and subtracting c_w
/// yields a base-restricted tree metric. A no-op on hcc_ultra_fit outputs;
/// needed by reductions whose ultrametric step can undershoot (single
/// linkage). With validate_input, throws if the input violates the strong
/// triangle inequality (O(n^3) scan).
DistanceMatrix restrict_reduced_ultrametric(const DistanceMatrix& du, const ReductionContext& ctx,
                                            bool validate_input = true);

enum class BaseStrategy {
  min_error,   // base minimizing the realized l1 error (default)
  min_hyp_l1,  // base minimizing ||Delta_w(d)||_1
};

struct BestBaseResult {
  TreeFitResult fit;
  int base = 0;
};

/// Tries every base point. Either strategy guarantees
/// ||d - d_T||_1 <= 8 C(n-1,3) AvgHyp_1(d); min_error additionally dominates
/// min_hyp_l1's realized error. Ties select the smallest index.
/// O(n^3 log n) for min_error; min_hyp_l1 adds one O(n^4) sweep.
BestBaseResult best_base_tree_fit(const DistanceMatrix& d,
                                  BaseStrategy strategy = BaseStrategy::min_error);

/// Realizes the tree behind a merge log produced on d + c_w. Each merge row
/// with children x, y at height h adds a Steiner node at root-distance
/// M - h/2 with edges down to its children; leaves sit at d(w, x). The final
/// node collapses onto the base point when it lands at root-distance 0,
/// otherwise it hangs off the base with the residual weight. Throws if a
/// computed edge weight is negative beyond tolerance (corrupted log).
WeightedTree construct_rooted_tree(const MergeLog& log, const ReductionContext& ctx);

}  // namespace treefit
