#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace treefit {

// Default tolerance for floating-point comparisons on derived quantities.
// Values copied verbatim from inputs (heights, matrix entries) are compared
// exactly.
inline constexpr double kTol = 1e-9;

inline std::uint64_t choose2(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
inline std::uint64_t choose3(std::uint64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }
inline std::uint64_t choose4(std::uint64_t n) { return n < 4 ? 0 : n * (n - 1) * (n - 2) * (n - 3) / 24; }

[[noreturn]] inline void fail(const std::string& msg) { throw std::invalid_argument(msg); }

inline void require(bool ok, const std::string& msg) {
  if (!ok) fail(msg);
}

}  // namespace treefit
