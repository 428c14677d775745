#include <doctest.h>

#include <cmath>
#include <limits>

#include "treefit/metric_stats.hpp"
#include "treefit/oracle.hpp"
#include "treefit/rng.hpp"
#include "support.hpp"

using namespace treefit;
using namespace treefit::testing;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("gromov product basics") {
  const auto d = rooted_seven_point_example();
  // gp_w(x,x) = d(x,w)
  CHECK(gromov_product(d, 0, 1, 1) == 9.0);
  CHECK(gromov_product(d, 0, 1, 2) == 8.5);
  // 2(M - gp) matches the reduced entry for the pair (1,2)
  CHECK(2.0 * (10.0 - gromov_product(d, 0, 1, 2)) == 3.0);
  CHECK_THROWS(gromov_product(d, 7, 0, 1));
}

TEST_CASE("gromov product nonnegative on metrics") {
  const auto d = random_graph_metric(12, 7);
  REQUIRE(d.is_metric());
  for (int w = 0; w < d.size(); ++w)
    for (int x = 0; x < d.size(); ++x)
      for (int y = 0; y < d.size(); ++y) CHECK(gromov_product(d, w, x, y) >= 0.0);
}

TEST_CASE("three point condition") {
  const auto cert = oracle::tightness_certificate(6);
  CHECK(three_point(cert.instance, 0, 1, 2) == 1.0);

  DistanceMatrix eq(3);
  eq.set(0, 1, 5.0);
  eq.set(0, 2, 5.0);
  eq.set(1, 2, 5.0);
  CHECK(three_point(eq, 0, 1, 2) == 0.0);

  CHECK_THROWS(three_point(eq, 0, 0, 1));
}

TEST_CASE("three point equals permutation enumeration") {
  Rng rng(11);
  const auto d = random_dissimilarity(10, 3);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = rng.distinct<3>(d.size());
    CHECK(three_point(d, t[0], t[1], t[2]) ==
          doctest::Approx(oracle::tp_by_enumeration(d, t[0], t[1], t[2])).epsilon(1e-12));
  }
}

TEST_CASE("four point vanishes on tree metrics") {
  const auto d = tree_path_metric(random_leaf_tree(8, 5));
  for (int x = 0; x < 8; ++x)
    for (int y = x + 1; y < 8; ++y)
      for (int z = y + 1; z < 8; ++z)
        for (int w = z + 1; w < 8; ++w) CHECK(four_point(d, x, y, z, w) <= 1e-12);
}

TEST_CASE("four point equals permutation enumeration on 10^4 random quadruples") {
  Rng rng(13);
  for (int trial = 0; trial < 10'000; ++trial) {
    const auto d = random_dissimilarity(8, 1000 + trial % 50);
    const auto q = rng.distinct<4>(d.size());
    const double fast = four_point(d, q[0], q[1], q[2], q[3]);
    const double slow = oracle::fp_by_enumeration(d, q[0], q[1], q[2], q[3]);
    CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
    CHECK(fast >= 0.0);
  }
}

TEST_CASE("four point is invariant under argument relabeling") {
  const auto d = random_dissimilarity(8, 21);
  const double reference = four_point(d, 0, 3, 5, 7);
  int perm[4] = {0, 3, 5, 7};
  std::sort(perm, perm + 4);
  do {
    CHECK(four_point(d, perm[0], perm[1], perm[2], perm[3]) == doctest::Approx(reference));
  } while (std::next_permutation(perm, perm + 4));
}

TEST_CASE("four point bounded by half the triple defect sum") {
  const auto d = random_dissimilarity(9, 33);
  for (int x = 0; x < 9; ++x)
    for (int y = x + 1; y < 9; ++y)
      for (int z = y + 1; z < 9; ++z)
        for (int w = z + 1; w < 9; ++w) {
          const double bound = 0.5 * (three_point(d, x, y, z) + three_point(d, x, y, w) +
                                      three_point(d, x, z, w) + three_point(d, y, z, w));
          CHECK(four_point(d, x, y, z, w) <= bound + 1e-12);
        }
}

TEST_CASE("hyperbolicity vector") {
  SUBCASE("tree metric gives all zeros") {
    const auto d = tree_path_metric(random_leaf_tree(7, 2));
    for (int w = 0; w < 7; ++w) {
      const auto v = hyperbolicity_vector(d, w);
      CHECK(v.values.size() == choose3(6));
      CHECK(v.linf() <= 1e-12);
    }
  }
  SUBCASE("tightness instance with base 3 has one candidate entry") {
    const auto cert = oracle::tightness_certificate(6);
    const auto v = hyperbolicity_vector(cert.instance, 3);
    // triples of {0,1,2,4,5} in lexicographic order; (0,1,2) comes first
    CHECK(v.values.size() == choose3(5));
    CHECK(v.values[0] == oracle::fp_by_enumeration(cert.instance, 0, 1, 2, 3));
    for (std::size_t i = 1; i < v.values.size(); ++i) CHECK(v.values[i] == 0.0);
  }
  SUBCASE("small n yields empty vector") {
    const auto d = random_dissimilarity(3, 1);
    CHECK(hyperbolicity_vector(d, 0).values.empty());
  }
  SUBCASE("per-base norms sum to 4 C(n,4) AvgHyp") {
    const auto d = random_dissimilarity(10, 9);
    double total = 0.0;
    for (int w = 0; w < d.size(); ++w) total += hyperbolicity_vector(d, w).l1();
    const auto st = hyp_stats(d);
    CHECK(total == doctest::Approx(4.0 * static_cast<double>(d.quadruple_count()) * st.avg_hyp)
                       .epsilon(1e-9));
  }
}

TEST_CASE("ultrametricity vector") {
  SUBCASE("tightness instance has a single unit entry") {
    const auto cert = oracle::tightness_certificate(7);
    const auto v = ultrametricity_vector(cert.instance);
    CHECK(v.values.size() == choose3(7));
    CHECK(v.l1() == 1.0);
    CHECK(v.values[0] == 1.0);  // triple (0,1,2) is lexicographically first
  }
  SUBCASE("ultrametrics give the zero vector") {
    const auto d = six_point_expected_ultrametric();
    CHECK(ultrametricity_vector(d).linf() == 0.0);
  }
  SUBCASE("l1 norm equals the threshold-sweep integral") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto d = random_dissimilarity(12, seed);
      CHECK(ultrametricity_vector(d).l1() ==
            doctest::Approx(integral_bad_triangles(d)).epsilon(1e-9));
    }
  }
}

TEST_CASE("hyp stats") {
  SUBCASE("ultrametric input is flat zero") {
    const auto st = hyp_stats(six_point_expected_ultrametric());
    CHECK(st.um == 0.0);
    CHECK(st.avg_um == 0.0);
    CHECK(st.exact);
  }
  SUBCASE("sample count covering all tuples reproduces the exact sweep") {
    const auto d = random_graph_metric(10, 17);
    const auto exact = hyp_stats(d);
    const auto sampled = hyp_stats(d, 1.0, SampleMode{choose4(10), 5});
    CHECK(sampled.exact);
    CHECK(sampled.hyp == exact.hyp);
    CHECK(sampled.avg_hyp == doctest::Approx(exact.avg_hyp).epsilon(1e-12));
    CHECK(sampled.avg_um == doctest::Approx(exact.avg_um).epsilon(1e-12));
  }
  SUBCASE("max dominates mean and p-means are monotone in p") {
    const auto d = random_euclidean_metric(12, 23);
    const auto p1 = hyp_stats(d, 1.0);
    const auto p2 = hyp_stats(d, 2.0);
    const auto p3 = hyp_stats(d, 3.0);
    const auto pinf = hyp_stats(d, kInf);
    CHECK(p1.hyp >= p1.avg_hyp);
    CHECK(p1.um >= p1.avg_um);
    CHECK(p1.avg_hyp <= p2.avg_hyp + 1e-12);
    CHECK(p2.avg_hyp <= p3.avg_hyp + 1e-12);
    CHECK(p3.avg_hyp <= pinf.avg_hyp + 1e-12);
    CHECK(pinf.avg_hyp == p1.hyp);
    CHECK(pinf.avg_um == p1.um);
  }
  SUBCASE("sampled estimate lands near the exact value") {
    const auto d = random_graph_metric(14, 3);
    const auto exact = hyp_stats(d);
    const auto sampled = hyp_stats(d, 1.0, SampleMode{20'000, 7});
    CHECK(!sampled.exact);
    CHECK(sampled.avg_hyp == doctest::Approx(exact.avg_hyp).epsilon(0.25));
    CHECK(sampled.hyp <= exact.hyp);  // sample max cannot exceed the true max
    CHECK(sampled.avg_hyp_half_width > 0.0);
  }
  SUBCASE("exact mode refused above the quadruple limit") {
    const auto d = random_dissimilarity(12, 2);
    CHECK_THROWS(hyp_stats(d, 1.0, std::nullopt, 100));
    CHECK_NOTHROW(hyp_stats(d, 1.0, SampleMode{50, 0}, 100));
  }
  SUBCASE("degenerate sizes give zeros") {
    const auto st = hyp_stats(random_dissimilarity(2, 1));
    CHECK(st.hyp == 0.0);
    CHECK(st.um == 0.0);
    CHECK(st.avg_hyp == 0.0);
    CHECK(st.avg_um == 0.0);
  }
}

TEST_CASE("bad triangle counting") {
  SUBCASE("complete graph has none") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) edges.emplace_back(i, j);
    CHECK(bad_triangles(6, edges) == 0);
  }
  SUBCASE("path on three vertices has one") {
    std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}};
    CHECK(bad_triangles(3, edges) == 1);
    CHECK(bad_triangle_list(3, edges) == std::vector<std::array<int, 3>>{{0, 1, 2}});
  }
  SUBCASE("random graphs match triple enumeration") {
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 12;
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng.unit() < 0.4) edges.emplace_back(i, j);
      CHECK(bad_triangles(n, edges) ==
            static_cast<std::int64_t>(bad_triangle_list(n, edges).size()));
    }
  }
  SUBCASE("rejects self-loops and duplicates") {
    CHECK_THROWS(bad_triangles(3, std::vector<std::pair<int, int>>{{0, 0}}));
    CHECK_THROWS(bad_triangles(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}));
  }
}

TEST_CASE("bad triangle integral") {
  SUBCASE("tightness instance integrates to one") {
    const auto cert = oracle::tightness_certificate(8);
    CHECK(integral_bad_triangles(cert.instance) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("ultrametric input integrates to zero") {
    CHECK(integral_bad_triangles(six_point_expected_ultrametric()) == 0.0);
  }
  SUBCASE("matches the ultrametricity vector on random instances") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const int n = 5 + static_cast<int>(seed % 11);
      const auto d = random_dissimilarity(n, seed);
      CHECK(integral_bad_triangles(d) ==
            doctest::Approx(ultrametricity_vector(d).l1()).epsilon(1e-9));
    }
  }
}
