#include "hatgame/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "hatgame/parallel.hpp"

namespace hatgame {

namespace {

void require_same_dimension(int a, int b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
}

}  // namespace

Strategy::Strategy(int n, std::vector<std::uint8_t> choices) : n_(n), choice_(std::move(choices)) {
  check_dimension(n);
  if (choice_.size() != cube_size(n))
    throw std::invalid_argument("strategy: expected " + std::to_string(cube_size(n)) +
                                " entries, got " + std::to_string(choice_.size()));
  for (std::size_t m = 0; m < choice_.size(); ++m)
    if (choice_[m] < 1 || choice_[m] > n)
      throw std::invalid_argument("strategy: entry " + std::to_string(m) + " is " +
                                  std::to_string(choice_[m]) + ", outside [1, " +
                                  std::to_string(n) + "]");
}

Strategy Strategy::constant(int n, int j) {
  check_dimension(n);
  return Strategy(n, std::vector<std::uint8_t>(cube_size(n), static_cast<std::uint8_t>(j)));
}

Strategy Strategy::random(int n, Rng& rng) {
  check_dimension(n);
  std::vector<std::uint8_t> c(cube_size(n));
  for (auto& v : c) v = static_cast<std::uint8_t>(1 + rng.below(static_cast<std::uint64_t>(n)));
  return Strategy(n, std::move(c));
}

TruthTable Strategy::level_set(int j) const {
  TruthTable t(n_);
  for (std::uint32_t m = 0; m < choice_.size(); ++m) t[m] = choice_[m] == j ? 1 : 0;
  return t;
}

Dyadic Strategy::level_probability(int j) const {
  auto count = std::count(choice_.begin(), choice_.end(), static_cast<std::uint8_t>(j));
  return Dyadic(count, static_cast<unsigned>(n_));
}

Strategy Strategy::precompose_negation() const {
  std::vector<std::uint8_t> c(choice_.size());
  const std::uint32_t mask = full_mask(n_);
  for (std::uint32_t m = 0; m < c.size(); ++m) c[m] = choice_[m ^ mask];
  return Strategy(n_, std::move(c));
}

std::strong_ordering operator<=>(const Strategy& a, const Strategy& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.choice_.begin(), a.choice_.end(),
                                                b.choice_.begin(), b.choice_.end());
}

LevelOneMatrix::LevelOneMatrix(int n, std::vector<std::int64_t> scaled)
    : n_(n), scaled_(std::move(scaled)) {
  check_dimension(n);
  if (scaled_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("LevelOneMatrix: expected n*n entries");
}

double LevelOneMatrix::frobenius_squared() const {
  double acc = 0;
  const double scale = std::ldexp(1.0, -n_);
  for (auto v : scaled_) acc += (v * scale) * (v * scale);
  return acc;
}

GameValue GameValue::from_w(Dyadic w) { return {w, (w + Dyadic(1)) * Dyadic(1, 2)}; }

GameValue eval_direct(const Strategy& f, const Strategy& g) {
  require_same_dimension(f.n(), g.n(), "eval_direct");
  const int n = f.n();
  if (n > kMaxDirectDimension)
    throw std::invalid_argument("eval_direct: n = " + std::to_string(n) +
                                " exceeds the enumeration limit " +
                                std::to_string(kMaxDirectDimension));
  const std::uint32_t size = cube_size(n);
  std::int64_t acc = 0;
  for (std::uint32_t x = 0; x < size; ++x) {
    const unsigned gi = static_cast<unsigned>(g(x) - 1);
    std::int64_t row = 0;
    for (std::uint32_t y = 0; y < size; ++y) {
      const unsigned fj = static_cast<unsigned>(f(y) - 1);
      // x_{f(y)} * y_{g(x)}: negative iff exactly one of the two bits is set.
      row += 1 - 2 * static_cast<std::int64_t>(((x >> fj) ^ (y >> gi)) & 1u);
    }
    acc += row;
  }
  return GameValue::from_w(Dyadic(acc, 2u * static_cast<unsigned>(n)));
}

LevelOneMatrix level_one_matrix(const Strategy& s) {
  const int n = s.n();
  std::vector<std::int64_t> scaled(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= n; ++j) {
    Spectrum sp = wht(s.level_set(j));
    for (int i = 1; i <= n; ++i)
      scaled[static_cast<std::size_t>(i - 1) * n + (j - 1)] = sp.raw(std::uint32_t{1} << (i - 1));
  }
  return LevelOneMatrix(n, std::move(scaled));
}

GameValue eval_fourier(const LevelOneMatrix& F, const LevelOneMatrix& G) {
  require_same_dimension(F.n(), G.n(), "eval_fourier");
  const int n = F.n();
  Dyadic::Int acc = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) acc += static_cast<Dyadic::Int>(F.scaled(i, j)) * G.scaled(j, i);
  return GameValue::from_w(Dyadic::from_raw(acc, 2u * static_cast<unsigned>(n)));
}

Strategy best_response(const LevelOneMatrix& M) {
  const int n = M.n();
  const std::uint32_t size = cube_size(n);
  std::vector<std::uint8_t> choice(size);
  for (std::uint32_t y = 0; y < size; ++y) {
    int best = 1;
    std::int64_t best_score = 0;
    for (int j = 0; j < n; ++j) {
      std::int64_t score = 0;
      for (int i = 0; i < n; ++i) {
        const std::int64_t v = M.scaled(j, i);
        score += ((y >> i) & 1u) ? -v : v;
      }
      if (j == 0 || score > best_score) {
        best = j + 1;
        best_score = score;
      }
    }
    choice[y] = static_cast<std::uint8_t>(best);
  }
  return Strategy(n, std::move(choice));
}

SolveResult alternating_solve(int n, std::uint64_t seed, std::uint64_t max_rounds) {
  if (n < 1 || n > kMaxDirectDimension)
    throw std::invalid_argument("alternating_solve: n = " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxDirectDimension) + "]");
  Rng rng(seed);
  Strategy f = Strategy::random(n, rng);
  Strategy g = Strategy::random(n, rng);
  LevelOneMatrix F = level_one_matrix(f);
  LevelOneMatrix G = level_one_matrix(g);
  Dyadic w = eval_fourier(F, G).w;

  SolveResult r{f, g, GameValue::from_w(w), 0, 1, false, {w}};
  while (r.iterations < max_rounds) {
    ++r.iterations;
    bool improved = false;

    Strategy f2 = best_response(G);
    LevelOneMatrix F2 = level_one_matrix(f2);
    Dyadic w2 = eval_fourier(F2, G).w;
    if (w2 > w) {
      f = std::move(f2);
      F = std::move(F2);
      w = w2;
      r.trace.push_back(w);
      improved = true;
    }

    Strategy g2 = best_response(F);
    LevelOneMatrix G2 = level_one_matrix(g2);
    w2 = eval_fourier(F, G2).w;
    if (w2 > w) {
      g = std::move(g2);
      G = std::move(G2);
      w = w2;
      r.trace.push_back(w);
      improved = true;
    }

    if (!improved) {
      r.converged = true;
      break;
    }
  }
  r.f = std::move(f);
  r.g = std::move(g);
  r.value = GameValue::from_w(w);
  return r;
}

namespace {

// Larger w wins; equal w goes to the lexicographically smaller (f, g).
bool better(const SolveResult& a, const SolveResult& b) {
  if (a.value.w != b.value.w) return a.value.w > b.value.w;
  if (a.f != b.f) return a.f < b.f;
  return a.g < b.g;
}

}  // namespace

SolveResult multi_start_solve(int n, const SolveOptions& options) {
  if (options.restarts < 1) throw std::invalid_argument("multi_start_solve: restarts must be >= 1");
  auto partials = parallel_chunks<std::vector<SolveResult>>(
      static_cast<std::uint64_t>(options.restarts), options.threads,
      [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<SolveResult> best;
        for (std::uint64_t r = begin; r < end; ++r) {
          SolveResult cur = alternating_solve(n, derive_seed(options.seed, r), options.max_rounds);
          if (best.empty() || better(cur, best.front())) best.assign(1, std::move(cur));
        }
        return best;
      });
  SolveResult* winner = nullptr;
  for (auto& p : partials)
    for (auto& cand : p)
      if (!winner || better(cand, *winner)) winner = &cand;
  SolveResult out = std::move(*winner);
  out.restarts_used = options.restarts;
  return out;
}

BruteForceResult brute_force_un(int n, unsigned threads) {
  if (n < 1 || n > kMaxBruteDimension)
    throw std::invalid_argument("brute_force_un: n = " + std::to_string(n) +
                                " is infeasible; only n in [1, 3] is supported");
  const std::uint32_t size = cube_size(n);
  std::size_t total = 1;
  for (std::uint32_t k = 0; k < size; ++k) total *= static_cast<std::size_t>(n);

  auto decode = [&](std::size_t index) {
    std::vector<std::uint8_t> c(size);
    for (std::uint32_t m = 0; m < size; ++m) {
      c[m] = static_cast<std::uint8_t>(1 + index % n);
      index /= n;
    }
    return Strategy(n, std::move(c));
  };

  // W depends on a strategy only through its level-one matrix, so keep one
  // representative (the smallest index) per distinct matrix.
  std::vector<std::pair<LevelOneMatrix, std::size_t>> mats;
  mats.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) mats.emplace_back(level_one_matrix(decode(idx)), idx);
  std::stable_sort(mats.begin(), mats.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  mats.erase(std::unique(mats.begin(), mats.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             mats.end());

  const std::size_t count = mats.size();
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  // Transposes let the inner product run over contiguous memory.
  std::vector<std::int64_t> flat(count * nn), flat_t(count * nn);
  for (std::size_t a = 0; a < count; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        flat[a * nn + i * n + j] = mats[a].first.scaled(i, j);
        flat_t[a * nn + j * n + i] = mats[a].first.scaled(i, j);
      }

  struct Best {
    std::int64_t value = INT64_MIN;
    std::size_t a = 0, b = 0;
  };
  auto partials = parallel_chunks<Best>(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    Best best;
    for (std::size_t a = begin; a < end; ++a) {
      const std::int64_t* F = &flat[a * nn];
      for (std::size_t b = 0; b < count; ++b) {
        const std::int64_t* Gt = &flat_t[b * nn];
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < nn; ++k) acc += F[k] * Gt[k];
        if (acc > best.value) best = {acc, a, b};
      }
    }
    return best;
  });
  Best best;
  for (const auto& p : partials)
    if (p.value > best.value) best = p;

  BruteForceResult r{GameValue::from_w(Dyadic(best.value, 2u * static_cast<unsigned>(n))),
                     decode(mats[best.a].second), decode(mats[best.b].second), total, count};
  return r;
}

}  // namespace hatgame
