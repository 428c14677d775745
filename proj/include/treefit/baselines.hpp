#pragma once

#include "treefit/fitters.hpp"

namespace treefit {

/// Subdominant ultrametric via agglomerative single linkage: d_U(x,y) is the
/// minimax path distance (minimum over x-y paths of the largest step).
/// d_U <= d entrywise and ||d - d_U||_inf <= ||Delta(d)||_inf ceil(log2(n-1)).
/// O(n^2) with nearest-neighbor rows; ties break toward smaller indices.
Ultrametric single_linkage_ultrametric(const DistanceMatrix& d);

/// Classic base-point tree fit: the ultrametric reduction instantiated with
/// single linkage, including the clipping restriction (single linkage never
/// stretches, so the lower clamp can fire). Base row preserved exactly and
/// ||d - d_T||_inf <= 2 ||Delta_w(d)||_inf ceil(log2(n-2)).
TreeFitResult gromov_tree_fit(const DistanceMatrix& d, int base);

/// Naive Saitou-Nei neighbor joining, O(n^3). Agglomerates the argmin of
/// Q(i,j) = (m-2) d(i,j) - S(i) - S(j) (lexicographic tie-break), splits the
/// joined edge by the S-imbalance, and reduces the matrix. Negative edge
/// weights are clamped to zero only after the tree is complete; the report's
/// errors are measured against the clamped tree. Exact on additive inputs,
/// no distortion guarantee otherwise.
TreeFitResult neighbor_join(const DistanceMatrix& d);

}  // namespace treefit
