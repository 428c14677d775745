#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "treefit/distance_matrix.hpp"

namespace treefit {

/// Gromov product of x and y with respect to the base point w:
/// (d(x,w) + d(y,w) - d(x,y)) / 2. May be negative if d is not a metric.
double gromov_product(const DistanceMatrix& d, int base, int x, int y);

/// Three-point condition: largest pairwise distance among {x,y,z} minus the
/// second largest. Zero exactly on ultrametric triples, always >= 0.
double three_point(const DistanceMatrix& d, int x, int y, int z);

/// Four-point condition: half the gap between the two largest of the three
/// pair sums d(x,y)+d(z,w), d(x,z)+d(y,w), d(x,w)+d(y,z). Zero exactly on
/// tree metrics, always >= 0, symmetric in all four arguments. The
/// equivalence with the permutation form over Gromov products is pinned by
/// tests against oracle::fp_by_enumeration.
double four_point(const DistanceMatrix& d, int x, int y, int z, int w);

/// Vector of per-triple defect values in lexicographic triple order.
/// With a base point: four-point values over triples of X minus the base
/// (length C(n-1,3)). Without: three-point values over all triples
/// (length C(n,3)).
struct HypVector {
  std::optional<int> base;
  std::vector<double> values;

  double l1() const;
  double linf() const;
};

HypVector hyperbolicity_vector(const DistanceMatrix& d, int base);
HypVector ultrametricity_vector(const DistanceMatrix& d);

struct SampleMode {
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
};

struct HypStats {
  double p = 1.0;
  double hyp = 0.0;     // max four-point value; sampled mode reports the sample max
  double um = 0.0;      // max three-point value; likewise
  double avg_hyp = 0.0; // p-mean of four-point values over quadruples
  double avg_um = 0.0;  // p-mean of three-point values over triples
  bool exact = true;
  std::uint64_t samples = 0;  // draws per sweep when sampled
  std::uint64_t seed = 0;
  // 95% half-widths for the sampled mean of the p-th powers (0 when exact).
  double avg_hyp_half_width = 0.0;
  double avg_um_half_width = 0.0;
};

/// Hyperbolicity / ultrametricity summary statistics. p in [1, inf]; pass
/// std::numeric_limits<double>::infinity() for the max statistics as p-means.
/// Exact mode sweeps all C(n,4) quadruples and is refused above
/// exact_quadruple_limit; sampled mode draws tuples i.i.d. from the given
/// seed (a sample count >= the exact tuple count falls back to enumeration).
HypStats hyp_stats(const DistanceMatrix& d, double p = 1.0,
                   std::optional<SampleMode> sample = std::nullopt,
                   std::uint64_t exact_quadruple_limit = 100'000'000);

/// Number of vertex triples with exactly two of their three edges present.
/// Counting-only fast path: paths of length two minus three times the
/// triangle count, via bitset adjacency intersection.
std::int64_t bad_triangles(int n, std::span<const std::pair<int, int>> edges);

/// Explicit triple set, O(n^3); intended for small n.
std::vector<std::array<int, 3>> bad_triangle_list(int n,
                                                  std::span<const std::pair<int, int>> edges);

/// Integral over s of the bad-triangle count of the s-neighbor graph
/// (edges = pairs with d <= s), evaluated exactly as a finite sum over the
/// distinct pair-distance thresholds. Equals the l1 norm of the
/// ultrametricity vector.
double integral_bad_triangles(const DistanceMatrix& d);

}  // namespace treefit
