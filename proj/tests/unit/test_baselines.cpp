#include <doctest.h>

#include <cmath>

#include "treefit/baselines.hpp"
#include "treefit/metric_stats.hpp"
#include "treefit/oracle.hpp"
#include "support.hpp"

using namespace treefit;
using namespace treefit::testing;

namespace {

// Minimax path distances by repeated relaxation; independent of the
// agglomerative implementation.
DistanceMatrix minimax_oracle(const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = i == j ? 0.0 : d(i, j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = std::min(m[i][j], std::max(m[i][k], m[k][j]));
  DistanceMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.set(i, j, m[i][j]);
  return out;
}

double ceil_log2(int k) { return k <= 1 ? 0.0 : std::ceil(std::log2(static_cast<double>(k))); }

}  // namespace

TEST_CASE("single linkage is the identity on ultrametrics") {
  const auto input = six_point_expected_ultrametric();
  const auto um = single_linkage_ultrametric(input);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(um.values(i, j) == input(i, j));
}

TEST_CASE("single linkage on the tightness instance shortcuts one pair") {
  const auto cert = oracle::tightness_certificate(6);
  const auto um = single_linkage_ultrametric(cert.instance);
  CHECK(um.values(0, 1) == 1.0);
  CHECK(um.values(0, 2) == 1.0);
  CHECK(um.values(1, 2) == 1.0);  // path through point 0
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      if (j > 2) CHECK(um.values(i, j) == 2.0);
}

TEST_CASE("single linkage equals minimax path distances") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const auto d = random_dissimilarity(n, seed + 60);
    const auto um = single_linkage_ultrametric(d);
    const auto want = minimax_oracle(d);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(um.values(i, j) == doctest::Approx(want(i, j)).epsilon(1e-12));
    CHECK(oracle::verify_ultrametric(um.values).pass);
  }
}

TEST_CASE("single linkage never stretches and meets the max-error bound") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 5 + static_cast<int>(seed);
    const auto d = random_euclidean_metric(n, seed + 80);
    const auto um = single_linkage_ultrametric(d);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) CHECK(um.values(i, j) <= d(i, j) + 1e-12);
    const double bound = ultrametricity_vector(d).linf() * ceil_log2(n - 1);
    CHECK(linf_distance(d, um.values) <= bound + 1e-9);
  }
}

TEST_CASE("gromov_tree_fit recovers tree metrics") {
  const auto d = tree_path_metric(random_leaf_tree(8, 3));
  for (int w = 0; w < d.size(); ++w) {
    const auto fit = gromov_tree_fit(d, w);
    CHECK(fit.report.l1_total <= 1e-9);
  }
}

TEST_CASE("gromov_tree_fit is base-restricted, zero-hyperbolic, and meets its bound") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const int n = 5 + static_cast<int>(seed % 7);
    const auto d = seed % 2 ? random_euclidean_metric(n, seed + 90)
                            : random_graph_metric(n, seed + 90);
    const int base = static_cast<int>(seed) % n;
    const auto fit = gromov_tree_fit(d, base);

    for (int x = 0; x < n; ++x) CHECK(fit.fitted(base, x) == d(base, x));
    CHECK(oracle::verify_tree_metric(fit.fitted).pass);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        CHECK(std::abs(tree_path_metric(fit.tree)(i, j) - fit.fitted(i, j)) <= 1e-9);

    const double bound = 2.0 * hyperbolicity_vector(d, base).linf() * ceil_log2(n - 2);
    CHECK(fit.report.linf <= bound + 1e-9);
  }
}

TEST_CASE("neighbor_join fits any three-point metric exactly") {
  const auto d = random_euclidean_metric(3, 5);
  const auto fit = neighbor_join(d);
  CHECK(fit.report.l1_total <= 1e-12);
  CHECK(fit.tree.node_count == 4);  // one Steiner node
}

TEST_CASE("neighbor_join recovers additive metrics without clamping") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 4 + static_cast<int>(seed + 2) % 17;
    const auto d = random_additive_metric(n, seed + 40);
    const auto fit = neighbor_join(d);
    CHECK(fit.report.l1_total <= 1e-9);
    CHECK(fit.clamped_edges == 0);
  }
}

TEST_CASE("neighbor_join is deterministic under ties") {
  const auto cert = oracle::tightness_certificate(8);  // heavily tied distances
  const auto a = neighbor_join(cert.instance);
  const auto b = neighbor_join(cert.instance);
  REQUIRE(a.tree.edges.size() == b.tree.edges.size());
  for (std::size_t i = 0; i < a.tree.edges.size(); ++i) {
    CHECK(a.tree.edges[i].u == b.tree.edges[i].u);
    CHECK(a.tree.edges[i].v == b.tree.edges[i].v);
    CHECK(a.tree.edges[i].weight == b.tree.edges[i].weight);
  }
}

TEST_CASE("neighbor_join clamps negative branches to zero") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto d = random_dissimilarity(9, seed + 300, 4.0);
    const auto fit = neighbor_join(d);
    for (const auto& e : fit.tree.edges) CHECK(e.weight >= 0.0);
    CHECK_NOTHROW(fit.tree.validate());
    // fitted distances recompute from the clamped tree
    const auto again = tree_path_metric(fit.tree);
    CHECK(l1_distance(again, fit.fitted) <= 1e-9);
  }
}

TEST_CASE("neighbor_join trivial sizes") {
  DistanceMatrix two(2);
  two.set(0, 1, 3.5);
  const auto fit = neighbor_join(two);
  CHECK(fit.fitted(0, 1) == 3.5);
  CHECK(fit.report.l1_total == 0.0);
}
