#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "treefit/common.hpp"

namespace treefit {

// Seeded generator with explicitly specified derived draws, so that results
// are identical across standard libraries (std:: distributions are not
// portable, the raw mt19937_64 stream is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next() { return gen_(); }

  // Unbiased integer in [0, bound) via rejection.
  std::uint64_t below(std::uint64_t bound) {
    require(bound > 0, "Rng::below: bound must be positive");
    const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int index(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  std::pair<int, int> distinct_pair(int n) {
    const int a = index(n);
    int b = index(n - 1);
    if (b >= a) ++b;
    return {a, b};
  }

  template <int K>
  std::array<int, K> distinct(int n) {
    static_assert(K >= 1);
    std::array<int, K> out{};
    for (;;) {
      bool ok = true;
      for (int i = 0; i < K; ++i) out[i] = index(n);
      for (int i = 0; i < K && ok; ++i)
        for (int j = i + 1; j < K; ++j)
          if (out[i] == out[j]) {
            ok = false;
            break;
          }
      if (ok) return out;
    }
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace treefit
