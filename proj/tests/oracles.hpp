#pragma once

// Slow reference computations written straight from the definitions, used
// to check the library. They share no code with the library's transforms
// or evaluators.

#include <cstdint>
#include <vector>

#include "hatgame/game.hpp"

namespace oracle {

inline int coord(std::uint32_t m, int i) { return ((m >> i) & 1u) ? -1 : 1; }

/// 2^n * hat t(S), summing t(x) prod_{i in S} x_i over all x.
inline std::int64_t coefficient_scaled(const std::vector<std::int64_t>& t, int n, std::uint32_t s) {
  std::int64_t acc = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    int chi = 1;
    for (int i = 0; i < n; ++i)
      if ((s >> i) & 1u) chi *= coord(m, i);
    acc += chi * t[m];
  }
  return acc;
}

/// 4^n * W: sum over all (x, y) of x_{f(y)} y_{g(x)}.
inline std::int64_t w_scaled(const hatgame::Strategy& f, const hatgame::Strategy& g) {
  const int n = f.n();
  std::int64_t acc = 0;
  for (std::uint32_t x = 0; x < (1u << n); ++x)
    for (std::uint32_t y = 0; y < (1u << n); ++y) acc += coord(x, f(y) - 1) * coord(y, g(x) - 1);
  return acc;
}

/// 2^n * E[Y_i 1{s(Y) = j}], row-major (i, j), 0-based.
inline std::vector<std::int64_t> level_one_scaled(const hatgame::Strategy& s) {
  const int n = s.n();
  std::vector<std::int64_t> out(static_cast<std::size_t>(n) * n, 0);
  for (std::uint32_t y = 0; y < (1u << n); ++y)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i) * n + (s(y) - 1)] += coord(y, i);
  return out;
}

/// Every strategy on n hats, in base-n counting order.
inline std::vector<hatgame::Strategy> all_strategies(int n) {
  std::uint64_t count = 1;
  for (std::uint32_t m = 0; m < (1u << n); ++m) count *= static_cast<std::uint64_t>(n);
  std::vector<hatgame::Strategy> out;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint8_t> c(1u << n);
    std::uint64_t r = idx;
    for (auto& v : c) {
      v = static_cast<std::uint8_t>(1 + r % static_cast<std::uint64_t>(n));
      r /= static_cast<std::uint64_t>(n);
    }
    out.emplace_back(n, std::move(c));
  }
  return out;
}

}  // namespace oracle
