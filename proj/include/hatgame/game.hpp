#pragma once

// Two-player hat game: each player sees the other's n hats and names one of
// their own. W = E[X_{f(Y)} Y_{g(X)}] is the match-game value and
// U = (W + 1) / 4 the probability that both named hats are black.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hatgame/dyadic.hpp"
#include "hatgame/hypercube.hpp"
#include "hatgame/rng.hpp"

namespace hatgame {

inline constexpr int kMaxDirectDimension = 13;
inline constexpr int kMaxBruteDimension = 3;
/// Choices are stored in a byte.
inline constexpr int kMaxStrategyDimension = 24;

/// Map from the opponent's hats (a point mask) to a hat index in [1, n].
class Strategy {
 public:
  /// Throws std::invalid_argument naming the first bad index.
  Strategy(int n, std::vector<std::uint8_t> choices);

  static Strategy constant(int n, int j);
  static Strategy random(int n, Rng& rng);

  int n() const { return n_; }
  int operator()(std::uint32_t m) const { return choice_[m]; }
  std::span<const std::uint8_t> choices() const { return choice_; }

  /// Indicator of the level set {s = j}.
  TruthTable level_set(int j) const;
  /// Pr{s(X) = j} as count / 2^n.
  Dyadic level_probability(int j) const;
  /// x -> s(-x).
  Strategy precompose_negation() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
  /// Lexicographic on the choice table.
  friend std::strong_ordering operator<=>(const Strategy& a, const Strategy& b);

 private:
  int n_;
  std::vector<std::uint8_t> choice_;
};

/// F_ij = E[Y_i 1{s(Y) = j}], stored scaled by 2^n. Indices are 0-based here:
/// entry(i, j) is the coefficient of coordinate i+1 in the level set of hat
/// j+1.
class LevelOneMatrix {
 public:
  LevelOneMatrix(int n, std::vector<std::int64_t> scaled);

  int n() const { return n_; }
  std::int64_t scaled(int i, int j) const { return scaled_[static_cast<std::size_t>(i) * n_ + j]; }
  Dyadic entry(int i, int j) const { return Dyadic(scaled(i, j), static_cast<unsigned>(n_)); }
  std::span<const std::int64_t> scaled_entries() const { return scaled_; }
  /// sum_ij F_ij^2 in floating point.
  double frobenius_squared() const;

  friend bool operator==(const LevelOneMatrix&, const LevelOneMatrix&) = default;
  friend auto operator<=>(const LevelOneMatrix&, const LevelOneMatrix&) = default;

 private:
  int n_;
  std::vector<std::int64_t> scaled_;
};

struct GameValue {
  Dyadic w;
  Dyadic u;

  static GameValue from_w(Dyadic w);
  friend bool operator==(const GameValue&, const GameValue&) = default;
};

/// Exact enumeration over all 4^n hat configurations; n <= 13.
GameValue eval_direct(const Strategy& f, const Strategy& g);

LevelOneMatrix level_one_matrix(const Strategy& s);

/// W = sum_ij F_ij G_ji.
GameValue eval_fourier(const LevelOneMatrix& F, const LevelOneMatrix& G);

/// Pointwise maximizer of sum_i y_i M_{ji} over hats j, smallest j on ties.
/// Against an opponent with level-one matrix G this is the best f; against
/// F it is the best g.
Strategy best_response(const LevelOneMatrix& M);

struct SolveResult {
  Strategy f;
  Strategy g;
  GameValue value;
  std::uint64_t iterations = 0;
  int restarts_used = 1;
  bool converged = false;
  /// w after the initial draw and after every best-response step.
  std::vector<Dyadic> trace;
};

/// Alternating best responses from a seed-derived random pair until a full
/// round leaves w unchanged or max_rounds rounds have run.
SolveResult alternating_solve(int n, std::uint64_t seed, std::uint64_t max_rounds);

struct SolveOptions {
  std::uint64_t seed = 0;
  int restarts = 64;
  std::uint64_t max_rounds = 1'000'000;
  unsigned threads = 0;
};

/// Independent restarts (restart r uses derive_seed(seed, r)) merged by
/// largest w, then lexicographically smallest (f, g).
SolveResult multi_start_solve(int n, const SolveOptions& options);

struct BruteForceResult {
  GameValue value;
  Strategy f;
  Strategy g;
  std::size_t strategies = 0;
  std::size_t distinct_matrices = 0;
};

/// Exact U_n over all strategy pairs, n <= 3.
BruteForceResult brute_force_un(int n, unsigned threads = 0);

}  // namespace hatgame
