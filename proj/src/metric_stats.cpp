#include "treefit/metric_stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "treefit/rng.hpp"

namespace treefit {
namespace {

void check_index(const DistanceMatrix& d, int i) {
  require(i >= 0 && i < d.size(), "point index out of range");
}

void check_distinct(std::initializer_list<int> ids) {
  for (auto a = ids.begin(); a != ids.end(); ++a)
    for (auto b = a + 1; b != ids.end(); ++b)
      require(*a != *b, "duplicate point indices");
}

inline double fp_from_sums(double s_xy_zw, double s_xz_yw, double s_xw_yz) {
  double hi = s_xy_zw, mid = s_xz_yw;
  if (hi < mid) std::swap(hi, mid);
  if (mid < s_xw_yz) {
    mid = s_xw_yz;
    if (hi < mid) std::swap(hi, mid);
  }
  return 0.5 * (hi - mid);
}

class KahanSum {
 public:
  void add(double term) {
    const double t = term - comp_;
    const double next = sum_ + t;
    comp_ = (next - sum_) - t;
    sum_ = next;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

struct SweepAccumulator {
  double p;
  bool p_is_inf;
  double max_value = 0.0;
  KahanSum power_sum;
  KahanSum power_sq_sum;  // for the sampled half-width
  std::uint64_t count = 0;

  explicit SweepAccumulator(double p_)
      : p(p_), p_is_inf(std::isinf(p_)) {}

  void add(double v) {
    ++count;
    max_value = std::max(max_value, v);
    if (p_is_inf) return;
    const double vp = p == 1.0 ? v : std::pow(v, p);
    power_sum.add(vp);
    power_sq_sum.add(vp * vp);
  }

  double mean_power() const { return count == 0 ? 0.0 : power_sum.value() / count; }

  double p_mean() const {
    if (count == 0) return 0.0;
    if (p_is_inf) return max_value;
    const double m = mean_power();
    return p == 1.0 ? m : std::pow(m, 1.0 / p);
  }

  double half_width() const {
    if (p_is_inf || count < 2) return 0.0;
    const double m = mean_power();
    const double var = std::max(0.0, power_sq_sum.value() / count - m * m);
    return 1.96 * std::sqrt(var / static_cast<double>(count));
  }
};

}  // namespace

double gromov_product(const DistanceMatrix& d, int base, int x, int y) {
  check_index(d, base);
  check_index(d, x);
  check_index(d, y);
  return 0.5 * (d(x, base) + d(y, base) - d(x, y));
}

double three_point(const DistanceMatrix& d, int x, int y, int z) {
  check_index(d, x);
  check_index(d, y);
  check_index(d, z);
  check_distinct({x, y, z});
  double a = d(x, y), b = d(y, z), c = d(x, z);
  // largest minus second largest
  if (a < b) std::swap(a, b);
  if (a < c) std::swap(a, c);
  return a - std::max(b, c);
}

double four_point(const DistanceMatrix& d, int x, int y, int z, int w) {
  check_index(d, x);
  check_index(d, y);
  check_index(d, z);
  check_index(d, w);
  check_distinct({x, y, z, w});
  return fp_from_sums(d(x, y) + d(z, w), d(x, z) + d(y, w), d(x, w) + d(y, z));
}

double HypVector::l1() const {
  KahanSum s;
  for (double v : values) s.add(v);
  return s.value();
}

double HypVector::linf() const {
  double m = 0.0;
  for (double v : values) m = std::max(m, v);
  return m;
}

HypVector hyperbolicity_vector(const DistanceMatrix& d, int base) {
  check_index(d, base);
  const int n = d.size();
  HypVector out;
  out.base = base;
  if (n < 4) return out;
  out.values.reserve(choose3(static_cast<std::uint64_t>(n - 1)));
  const double* dw = d.row(base);
  for (int x = 0; x < n; ++x) {
    if (x == base) continue;
    const double* dx = d.row(x);
    for (int y = x + 1; y < n; ++y) {
      if (y == base) continue;
      const double* dy = d.row(y);
      for (int z = y + 1; z < n; ++z) {
        if (z == base) continue;
        out.values.push_back(
            fp_from_sums(dx[y] + dw[z], dx[z] + dy[base], dx[base] + dy[z]));
      }
    }
  }
  return out;
}

HypVector ultrametricity_vector(const DistanceMatrix& d) {
  const int n = d.size();
  HypVector out;
  if (n < 3) return out;
  out.values.reserve(d.triple_count());
  for (int x = 0; x < n; ++x) {
    const double* dx = d.row(x);
    for (int y = x + 1; y < n; ++y) {
      const double* dy = d.row(y);
      for (int z = y + 1; z < n; ++z) {
        double a = dx[y], b = dy[z], c = dx[z];
        if (a < b) std::swap(a, b);
        if (a < c) std::swap(a, c);
        out.values.push_back(a - std::max(b, c));
      }
    }
  }
  return out;
}

HypStats hyp_stats(const DistanceMatrix& d, double p, std::optional<SampleMode> sample,
                   std::uint64_t exact_quadruple_limit) {
  require(p >= 1.0, "hyp_stats: p must be in [1, inf]");
  const int n = d.size();
  HypStats st;
  st.p = p;
  const std::uint64_t triples = d.triple_count();
  const std::uint64_t quads = d.quadruple_count();

  const bool tri_exhaustive = !sample || sample->count >= triples;
  const bool quad_exhaustive = !sample || sample->count >= quads;
  if (sample) {
    st.seed = sample->seed;
    st.samples = sample->count;
  }
  st.exact = tri_exhaustive && quad_exhaustive;
  if (quad_exhaustive)
    require(quads <= exact_quadruple_limit,
            "hyp_stats: exact quadruple sweep over the configured limit; use sampled mode");

  SweepAccumulator tri_acc(p), quad_acc(p);

  if (n >= 3) {
    if (tri_exhaustive) {
      for (int x = 0; x < n; ++x) {
        const double* dx = d.row(x);
        for (int y = x + 1; y < n; ++y) {
          const double* dy = d.row(y);
          for (int z = y + 1; z < n; ++z) {
            double a = dx[y], b = dy[z], c = dx[z];
            if (a < b) std::swap(a, b);
            if (a < c) std::swap(a, c);
            tri_acc.add(a - std::max(b, c));
          }
        }
      }
    } else {
      Rng rng(sample->seed);
      for (std::uint64_t i = 0; i < sample->count; ++i) {
        const auto t = rng.distinct<3>(n);
        tri_acc.add(three_point(d, t[0], t[1], t[2]));
      }
    }
  }

  if (n >= 4) {
    if (quad_exhaustive) {
      for (int x = 0; x < n; ++x) {
        const double* dx = d.row(x);
        for (int y = x + 1; y < n; ++y) {
          const double* dy = d.row(y);
          for (int z = y + 1; z < n; ++z) {
            const double* dz = d.row(z);
            const double dxy = dx[y], dxz = dx[z], dyz = dy[z];
            for (int w = z + 1; w < n; ++w)
              quad_acc.add(fp_from_sums(dxy + dz[w], dxz + dy[w], dx[w] + dyz));
          }
        }
      }
    } else {
      Rng rng(sample->seed + 0x9e3779b97f4a7c15ull);  // independent stream
      for (std::uint64_t i = 0; i < sample->count; ++i) {
        const auto q = rng.distinct<4>(n);
        quad_acc.add(four_point(d, q[0], q[1], q[2], q[3]));
      }
    }
  }

  st.um = tri_acc.max_value;
  st.avg_um = tri_acc.p_mean();
  st.hyp = quad_acc.max_value;
  st.avg_hyp = quad_acc.p_mean();
  if (!tri_exhaustive) st.avg_um_half_width = tri_acc.half_width();
  if (!quad_exhaustive) st.avg_hyp_half_width = quad_acc.half_width();
  return st;
}

namespace {

// 64-bit-word adjacency rows.
struct BitAdjacency {
  int n = 0, words = 0;
  std::vector<std::uint64_t> bits;
  std::vector<int> degree;

  explicit BitAdjacency(int n_) : n(n_), words((n_ + 63) / 64), bits(static_cast<std::size_t>(n_) * words, 0), degree(n_, 0) {}

  void add(int u, int v) {
    bits[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64);
    bits[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    ++degree[u];
    ++degree[v];
  }
  bool has(int u, int v) const {
    return bits[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64) & 1ull;
  }
  std::int64_t common(int u, int v) const {
    const std::uint64_t* a = bits.data() + static_cast<std::size_t>(u) * words;
    const std::uint64_t* b = bits.data() + static_cast<std::size_t>(v) * words;
    std::int64_t c = 0;
    for (int w = 0; w < words; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }
};

void validate_edges(int n, std::span<const std::pair<int, int>> edges, BitAdjacency& adj) {
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "bad_triangles: vertex out of range");
    require(u != v, "bad_triangles: self-loop");
    require(!adj.has(u, v), "bad_triangles: duplicate edge");
    adj.add(u, v);
  }
}

}  // namespace

std::int64_t bad_triangles(int n, std::span<const std::pair<int, int>> edges) {
  require(n >= 0, "bad_triangles: negative vertex count");
  BitAdjacency adj(n);
  validate_edges(n, edges, adj);
  // paths of length two, minus three per triangle
  std::int64_t paths2 = 0;
  for (int v = 0; v < n; ++v)
    paths2 += static_cast<std::int64_t>(adj.degree[v]) * (adj.degree[v] - 1) / 2;
  std::int64_t triangle_ends = 0;
  for (auto [u, v] : edges) triangle_ends += adj.common(u, v);
  return paths2 - triangle_ends;  // triangle_ends = 3 * #triangles
}

std::vector<std::array<int, 3>> bad_triangle_list(int n,
                                                  std::span<const std::pair<int, int>> edges) {
  BitAdjacency adj(n);
  validate_edges(n, edges, adj);
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z) {
        const int present = (adj.has(x, y) ? 1 : 0) + (adj.has(y, z) ? 1 : 0) + (adj.has(x, z) ? 1 : 0);
        if (present == 2) out.push_back({x, y, z});
      }
  return out;
}

double integral_bad_triangles(const DistanceMatrix& d) {
  const int n = d.size();
  if (n < 3) return 0.0;

  struct PairEntry {
    double dist;
    int u, v;
  };
  std::vector<PairEntry> pairs;
  pairs.reserve(d.pair_count());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({d(i, j), i, j});
  std::sort(pairs.begin(), pairs.end(), [](const PairEntry& a, const PairEntry& b) {
    return a.dist < b.dist;
  });

  BitAdjacency adj(n);
  std::int64_t bad = 0;
  KahanSum integral;
  std::size_t i = 0;
  while (i < pairs.size()) {
    const double threshold = pairs[i].dist;
    // add the whole tie group; each edge (u,v) flips triples (u,v,z)
    while (i < pairs.size() && pairs[i].dist == threshold) {
      const int u = pairs[i].u, v = pairs[i].v;
      for (int z = 0; z < n; ++z) {
        if (z == u || z == v) continue;
        const bool zu = adj.has(z, u), zv = adj.has(z, v);
        if (zu && zv)
          --bad;  // was bad, becomes a triangle
        else if (zu || zv)
          ++bad;  // had one edge, becomes bad
      }
      adj.add(u, v);
      ++i;
    }
    if (i < pairs.size())
      integral.add(static_cast<double>(bad) * (pairs[i].dist - threshold));
    // beyond the largest threshold the graph is complete: no bad triangles
  }
  return integral.value();
}

}  // namespace treefit
