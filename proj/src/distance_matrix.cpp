#include "treefit/distance_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace treefit {

DistanceMatrix DistanceMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  std::vector<std::vector<double>> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(v);
}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  DistanceMatrix d(n);
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(rows[i].size()) == n, "DistanceMatrix::from_rows: ragged rows");
    for (int j = 0; j < n; ++j) d.d_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
  }
  d.validate();
  return d;
}

void DistanceMatrix::validate(double tol) const {
  for (int i = 0; i < n_; ++i) {
    require(std::abs((*this)(i, i)) <= tol, "DistanceMatrix: nonzero diagonal");
    for (int j = i + 1; j < n_; ++j) {
      require(std::abs((*this)(i, j) - (*this)(j, i)) <= tol, "DistanceMatrix: not symmetric");
      require((*this)(i, j) >= -tol, "DistanceMatrix: negative entry");
    }
  }
}

bool DistanceMatrix::is_metric(double tol) const {
  for (int i = 0; i < n_; ++i) {
    const double* di = row(i);
    for (int j = 0; j < n_; ++j) {
      if (j == i) continue;
      const double* dj = row(j);
      for (int k = j + 1; k < n_; ++k) {
        if (k == i) continue;
        if (dj[k] > di[j] + di[k] + tol) return false;
      }
    }
  }
  return true;
}

double l1_distance(const DistanceMatrix& a, const DistanceMatrix& b) {
  require(a.size() == b.size(), "l1_distance: size mismatch");
  double sum = 0.0, comp = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      const double term = std::abs(a(i, j) - b(i, j)) - comp;
      const double next = sum + term;
      comp = (next - sum) - term;
      sum = next;
    }
  return sum;
}

double linf_distance(const DistanceMatrix& a, const DistanceMatrix& b) {
  require(a.size() == b.size(), "linf_distance: size mismatch");
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

}  // namespace treefit
