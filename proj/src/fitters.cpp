#include "treefit/fitters.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace treefit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool strong_triangle_holds(const DistanceMatrix& d, double tol) {
  const int n = d.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (d(x, y) > std::max(d(x, z), d(y, z)) + tol) return false;
      }
  return true;
}

}  // namespace

ReductionContext ReductionContext::around(const DistanceMatrix& d, int base) {
  require(base >= 0 && base < d.size(), "ReductionContext: base out of range");
  ReductionContext ctx;
  ctx.base = base;
  ctx.to_base.resize(d.size());
  for (int x = 0; x < d.size(); ++x) {
    ctx.to_base[x] = d(x, base);
    ctx.radius = std::max(ctx.radius, ctx.to_base[x]);
  }
  return ctx;
}

DistanceMatrix ReductionContext::reduced(const DistanceMatrix& d) const {
  const int n = d.size();
  require(static_cast<int>(to_base.size()) == n, "ReductionContext: size mismatch");
  DistanceMatrix out(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == base || y == base)
        out.set(x, y, 2.0 * radius);  // d + c_w is identically 2M on the base row
      else
        out.set(x, y, d(x, y) + offset(x, y));
    }
  return out;
}

DistanceMatrix ultrametric_from_merge_log(const MergeLog& log) {
  const int n = log.n;
  DistanceMatrix values(n);
  if (n <= 1) return values;
  // Each pair is covered by exactly one block product, so the pass is O(n^2).
  std::vector<std::vector<int>> members(2 * n - 1);
  for (int v = 0; v < n; ++v) members[v] = {v};
  for (std::size_t t = 0; t < log.rows.size(); ++t) {
    const MergeRow& row = log.rows[t];
    auto& a = members[row.id_a];
    auto& b = members[row.id_b];
    for (int x : a)
      for (int y : b) values.set(x, y, row.height);
    if (a.size() < b.size()) a.swap(b);
    a.insert(a.end(), b.begin(), b.end());
    b.clear();
    b.shrink_to_fit();
    members[n + t] = std::move(a);
  }
  return values;
}

Ultrametric hcc_ultra_fit(const DistanceMatrix& d) {
  d.validate();
  require(d.size() >= 1, "hcc_ultra_fit: empty input");
  Ultrametric out;
  out.linkage = hcc_triangle(EdgeOrdering::sorted_by_distance(d));
  out.values = ultrametric_from_merge_log(out.linkage);
  return out;
}

DistanceMatrix restrict_reduced_ultrametric(const DistanceMatrix& du, const ReductionContext& ctx,
                                            bool validate_input) {
  const int n = du.size();
  require(static_cast<int>(ctx.to_base.size()) == n,
          "restrict_reduced_ultrametric: size mismatch");
  if (validate_input)
    require(strong_triangle_holds(du, kTol),
            "restrict_reduced_ultrametric: input is not an ultrametric");
  DistanceMatrix out(n);
  const double hi = 2.0 * ctx.radius;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double lo = std::max(ctx.beta(x), ctx.beta(y));
      out.set(x, y, std::min(std::max(lo, du(x, y)), hi));
    }
  return out;
}

WeightedTree construct_rooted_tree(const MergeLog& log, const ReductionContext& ctx) {
  log.validate();
  const int n = log.n;
  require(static_cast<int>(ctx.to_base.size()) == n, "construct_rooted_tree: size mismatch");

  WeightedTree t;
  t.n_points = n;
  t.root = ctx.base;
  if (n == 1) {
    t.node_count = 1;
    return t;
  }
  require(static_cast<int>(log.rows.size()) == n - 1,
          "construct_rooted_tree: merge log is not a full linkage");

  // Root-distance level per node: leaves sit at d(w, x), the node of a merge
  // at height h sits at M - h/2.
  std::vector<double> level(2 * n - 1);
  for (int x = 0; x < n; ++x) level[x] = ctx.to_base[x];
  for (std::size_t tau = 0; tau < log.rows.size(); ++tau)
    level[n + tau] = ctx.radius - 0.5 * log.rows[tau].height;

  const int last = 2 * n - 2;
  const double top_level = level[last];
  if (top_level < -kTol)
    throw std::logic_error("construct_rooted_tree: final merge above 2M; corrupted log");
  const MergeRow& final_row = log.rows.back();
  const bool base_on_top = final_row.id_a == ctx.base || final_row.id_b == ctx.base;
  // The top node coincides with the base when it lands at level 0 and the
  // base leaf hangs directly off it; drop it then. When the base hangs off a
  // positive-level top node, keep the node and attach the base upward.
  const bool collapse = base_on_top && std::abs(top_level) <= kTol;

  t.node_count = collapse ? 2 * n - 2 : 2 * n - 1;
  t.edges.reserve(2 * n - 2);
  for (std::size_t tau = 0; tau < log.rows.size(); ++tau) {
    const int node = n + static_cast<int>(tau);
    const bool is_last = node == last;
    const int target = (collapse && is_last) ? ctx.base : node;
    for (int child : {log.rows[tau].id_a, log.rows[tau].id_b}) {
      if (collapse && is_last && child == ctx.base) continue;
      double weight = level[child] - level[node];
      if (weight < -kTol) {
        if (is_last && child == ctx.base && top_level > kTol) {
          weight = top_level;  // hang the base off the top node
        } else {
          throw std::logic_error("construct_rooted_tree: negative edge weight; corrupted log");
        }
      }
      t.edges.push_back({child, target, std::max(weight, 0.0)});
    }
  }
  return t;
}

TreeFitResult hcc_rooted_tree_fit(const DistanceMatrix& d, int base) {
  d.validate();
  const int n = d.size();
  require(base >= 0 && base < n, "hcc_rooted_tree_fit: invalid base point");

  const auto t0 = Clock::now();
  const ReductionContext ctx = ReductionContext::around(d, base);
  const Ultrametric um = hcc_ultra_fit(ctx.reduced(d));

  // The reduced-fit values always stay inside [max(beta_x, beta_y), 2M] for
  // metric inputs, so no clipping is needed before mapping back.
  const double hi = 2.0 * ctx.radius;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      const double v = um.values(x, y);
      if (v < std::max(ctx.beta(x), ctx.beta(y)) - kTol || v > hi + kTol)
        fail("hcc_rooted_tree_fit: reduced fit left the admissible band; "
             "input is not a metric");
    }

  DistanceMatrix fitted(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (x == base || y == base) {
        const int other = x == base ? y : x;
        const double mapped = um.values(x, y) - ctx.offset(x, y);
        if (std::abs(mapped - d(base, other)) > kTol)
          throw std::logic_error("hcc_rooted_tree_fit: base row not preserved");
        fitted.set(x, y, d(base, other));  // same value without rounding residue
      } else {
        fitted.set(x, y, um.values(x, y) - ctx.offset(x, y));
      }
    }

  TreeFitResult result;
  result.tree = construct_rooted_tree(um.linkage, ctx);
  const double elapsed = seconds_since(t0);
  result.fitted = std::move(fitted);
  result.report = make_fit_report("hcc", d, result.fitted, elapsed, base);
  return result;
}

BestBaseResult best_base_tree_fit(const DistanceMatrix& d, BaseStrategy strategy) {
  d.validate();
  const int n = d.size();
  require(n >= 2, "best_base_tree_fit: need at least two points");

  if (strategy == BaseStrategy::min_hyp_l1) {
    // ||Delta_w||_1 sums the four-point values of the quadruples containing
    // w, so one sweep accumulates all n norms at once.
    std::vector<double> norm(n, 0.0);
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z)
          for (int w = z + 1; w < n; ++w) {
            double s1 = d(x, y) + d(z, w), s2 = d(x, z) + d(y, w), s3 = d(x, w) + d(y, z);
            if (s1 < s2) std::swap(s1, s2);
            if (s2 < s3) {
              s2 = s3;
              if (s1 < s2) std::swap(s1, s2);
            }
            const double fp = 0.5 * (s1 - s2);
            norm[x] += fp;
            norm[y] += fp;
            norm[z] += fp;
            norm[w] += fp;
          }
    int best = 0;
    for (int w = 1; w < n; ++w)
      if (norm[w] < norm[best]) best = w;
    return {hcc_rooted_tree_fit(d, best), best};
  }

  BestBaseResult out;
  bool have = false;
  for (int w = 0; w < n; ++w) {
    TreeFitResult fit = hcc_rooted_tree_fit(d, w);
    if (!have || fit.report.l1_total < out.fit.report.l1_total) {
      out.fit = std::move(fit);
      out.base = w;
      have = true;
    }
  }
  return out;
}

}  // namespace treefit
