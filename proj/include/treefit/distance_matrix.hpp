#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "treefit/common.hpp"

namespace treefit {

/// Dense symmetric matrix of pairwise dissimilarities on n labeled points.
/// Invariants: zero diagonal, symmetry, nonnegative entries. The triangle
/// inequality is deliberately not an invariant (reduced inputs like d + c_w
/// may violate it); use is_metric() to test it on demand.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {
    require(n >= 0, "DistanceMatrix: negative size");
  }

  static DistanceMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int size() const { return n_; }

  double operator()(int i, int j) const { return d_[idx(i, j)]; }

  // Sets both (i,j) and (j,i).
  void set(int i, int j, double v) {
    d_[idx(i, j)] = v;
    d_[idx(j, i)] = v;
  }

  std::uint64_t pair_count() const { return choose2(static_cast<std::uint64_t>(n_)); }
  std::uint64_t triple_count() const { return choose3(static_cast<std::uint64_t>(n_)); }
  std::uint64_t quadruple_count() const { return choose4(static_cast<std::uint64_t>(n_)); }

  /// Checks the invariants (zero diagonal, symmetry, nonnegativity) within tol.
  void validate(double tol = kTol) const;

  /// True iff the triangle inequality holds on all triples within tol.
  bool is_metric(double tol = kTol) const;

  const double* row(int i) const { return d_.data() + static_cast<std::size_t>(i) * n_; }

 private:
  std::size_t idx(int i, int j) const {
    require(i >= 0 && i < n_ && j >= 0 && j < n_, "DistanceMatrix: index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> d_;
};

/// Sum over unordered pairs of |a - b|.
double l1_distance(const DistanceMatrix& a, const DistanceMatrix& b);

/// Max over unordered pairs of |a - b|.
double linf_distance(const DistanceMatrix& a, const DistanceMatrix& b);

}  // namespace treefit
