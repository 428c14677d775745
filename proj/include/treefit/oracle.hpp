#pragma once

#include <cstdint>
#include <string>

#include "treefit/distance_matrix.hpp"
#include "treefit/hcc.hpp"

namespace treefit::oracle {

// Brute-force verifiers, deliberately independent of the production fast
// paths they cross-check. Everything here prefers literal definitions over
// speed.

struct VerificationReport {
  std::string property;
  std::string instance;
  bool pass = true;
  std::string witness;  // violating tuple and values; nonempty iff !pass

  std::string to_json() const;  // one JSON line
};

/// Strong triangle inequality d(x,y) <= max(d(x,z), d(y,z)) on every triple.
VerificationReport verify_ultrametric(const DistanceMatrix& d, double tol = kTol);

/// Metric axioms plus zero four-point condition on every quadruple, with the
/// four-point values taken from the permutation enumeration.
VerificationReport verify_tree_metric(const DistanceMatrix& d, double tol = kTol);

/// Literal max over all 24 label permutations (p0,p1,p2,p3) of
/// min(gp_{p3}(p0,p2), gp_{p3}(p1,p2)) - gp_{p3}(p0,p1).
double fp_by_enumeration(const DistanceMatrix& d, int x, int y, int z, int w);

/// Literal max over all 6 label permutations of
/// d(p0,p2) - max(d(p0,p1), d(p1,p2)).
double tp_by_enumeration(const DistanceMatrix& d, int x, int y, int z);

/// Direct transcription of the clustering rule: explicit member lists,
/// explicit adjacency, from-scratch highly-connected tests. O(n^4) worst
/// case; the normative reference for HccTriangle.
MergeLog hcc_triangle_reference(const EdgeOrdering& order);

/// Enumerates every graph on 2..max_n vertices; for each, replays the
/// clustering over edge insertion orders (all orders when feasible, else
/// orders_per_graph seeded samples) and recounts, from scratch at every
/// prefix step, that the disagreement |E_t Delta E(P_t)| stays within four
/// times the bad-triangle count of the prefix graph.
VerificationReport exhaustive_hcc_bound_check(int max_n = 6, int orders_per_graph = 100,
                                              std::uint64_t seed = 0);

/// The asymptotic-tightness instance: d(x0,x1) = d(x0,x2) = 1, all other
/// pairs 2. Its ultrametricity vector has a single unit entry, and any
/// ultrametric accumulates l1 error at least min_ultrametric_error on the
/// defective triple alone.
struct TightnessCertificate {
  DistanceMatrix instance;
  double delta_l1 = 0.0;               // from tp_by_enumeration
  double min_ultrametric_error = 1.0;  // |e01| + |e02| + |e12| >= 1 for any ultrametric
};

TightnessCertificate tightness_certificate(int n);

}  // namespace treefit::oracle
