#include "hatgame/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hatgame/bounds.hpp"
#include "hatgame/game.hpp"
#include "hatgame/hypercube.hpp"
#include "hatgame/parallel.hpp"
#include "hatgame/rng.hpp"

namespace hatgame::verify {

namespace {

constexpr double kFloatTolerance = 1e-12;

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
  }
};

// Runs check(index, tally) for index in [0, count) across threads. Partial
// tallies are merged in index order, so witnesses are the first offenders.
template <class Check>
Tally run_indexed(std::uint64_t count, unsigned threads, Check check) {
  auto partials = parallel_chunks<Tally>(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
    Tally t;
    for (std::uint64_t i = begin; i < end; ++i) check(i, t);
    return t;
  });
  Tally out;
  for (auto& p : partials) {
    out.checked += p.checked;
    out.violations += p.violations;
    for (auto& w : p.witnesses)
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back(std::move(w));
  }
  return out;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

SuiteReport finish(std::string suite, int n, std::uint64_t expected, Tally&& t, const Stopwatch& sw) {
  SuiteReport r;
  r.suite = std::move(suite);
  r.n = n;
  r.checked = t.checked;
  r.expected = expected;
  r.violations = t.violations;
  r.witnesses = std::move(t.witnesses);
  r.elapsed_ms = sw.ms();
  return r;
}

void require_range(const char* suite, int n, int lo, int hi) {
  if (n < lo || n > hi)
    throw std::invalid_argument(std::string(suite) + ": n = " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string hex(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
  return buf;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

std::uint64_t samples_or(const SuiteOptions& opt, std::uint64_t fallback) {
  return opt.samples == 0 ? fallback : opt.samples;
}

TruthTable random_indicator(int n, Rng& rng) {
  // Density drawn first so sparse and dense tables both occur.
  const double p = rng.unit();
  TruthTable t(n);
  for (std::uint32_t m = 0; m < cube_size(n); ++m) t[m] = rng.unit() < p ? 1 : 0;
  return t;
}

TruthTable random_integer_table(int n, Rng& rng, int radius) {
  TruthTable t(n);
  for (std::uint32_t m = 0; m < cube_size(n); ++m)
    t[m] = static_cast<std::int64_t>(rng.below(2 * radius + 1)) - radius;
  return t;
}

// Level-one mass scaled by 4^n, from the singleton coefficients only.
Dyadic::Int level_one_scaled(const Spectrum& sp) {
  Dyadic::Int acc = 0;
  for (int i = 0; i < sp.n(); ++i) {
    Dyadic::Int r = sp.raw(std::uint32_t{1} << i);
    acc += r * r;
  }
  return acc;
}

Strategy decode_strategy(int n, std::uint64_t index) {
  std::vector<std::uint8_t> c(cube_size(n));
  for (auto& v : c) {
    v = static_cast<std::uint8_t>(1 + index % static_cast<std::uint64_t>(n));
    index /= static_cast<std::uint64_t>(n);
  }
  return Strategy(n, std::move(c));
}

}  // namespace

std::string SuiteReport::to_text(bool with_timing) const {
  std::ostringstream out;
  out << "suite " << suite << " n=" << n << ": checked " << checked << ", violations " << violations;
  if (expected != 0) out << " (expected count " << expected << (checked == expected ? ", met" : ", MISSED") << ")";
  if (with_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, ", %.1f ms", elapsed_ms);
    out << buf;
  }
  out << "\n";
  for (const auto& note : notes) out << "  note: " << note << "\n";
  for (const auto& w : witnesses) out << "  witness: " << w << "\n";
  return out.str();
}

std::string SuiteReport::to_json(bool with_timing) const {
  nlohmann::ordered_json doc;
  doc["suite"] = suite;
  doc["n"] = n;
  doc["checked"] = checked;
  doc["expected"] = expected;
  doc["violations"] = violations;
  doc["witnesses"] = witnesses;
  doc["notes"] = notes;
  doc["elapsed_ms"] = with_timing ? nlohmann::ordered_json(elapsed_ms) : nlohmann::ordered_json();
  return doc.dump();
}

SuiteReport verify_wht(int n, const SuiteOptions& opt) {
  require_range("wht", n, 1, kMaxNaiveDimension);
  Stopwatch sw;
  const bool exhaustive = n <= 3;
  const std::uint64_t count = exhaustive ? (std::uint64_t{1} << cube_size(n)) : samples_or(opt, 10000);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    TruthTable table = exhaustive ? TruthTable::indicator_from_bits(n, i) : [&] {
      Rng rng(derive_seed(opt.seed, i));
      return random_indicator(n, rng);
    }();
    ++tally.checked;
    const std::string id = exhaustive ? "table " + hex(i) : "sample " + std::to_string(i);
    Spectrum fast = wht(table);
    if (fast != wht_naive(table)) return tally.fail(id + ": fast and naive transforms differ");
    std::vector<std::int64_t> twice(fast.raw().begin(), fast.raw().end());
    walsh_hadamard_inplace(twice);
    for (std::uint32_t m = 0; m < table.size(); ++m)
      if (twice[m] != table[m] * static_cast<std::int64_t>(cube_size(n)))
        return tally.fail(id + ": double transform is not 2^n times the table");
    Spectrum neg = wht(table.negated());
    for (std::uint32_t s = 0; s < fast.size(); ++s)
      if (neg.raw(s) != ((__builtin_popcount(s) & 1) ? -fast.raw(s) : fast.raw(s)))
        return tally.fail(id + ": negation law fails at subset " + hex(s));
    if (inverse_wht(fast) != table) return tally.fail(id + ": inverse does not round-trip");
  });
  return finish("wht", n, exhaustive ? count : 0, std::move(t), sw);
}

SuiteReport verify_plancherel(int n, const SuiteOptions& opt) {
  require_range("plancherel", n, 1, 16);
  Stopwatch sw;
  const bool exhaustive = n <= 2;
  const std::uint64_t tables = std::uint64_t{1} << cube_size(n);
  const std::uint64_t count = exhaustive ? tables * tables : samples_or(opt, 10000);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    std::string id;
    TruthTable a(n), b(n), h(n);
    if (exhaustive) {
      a = TruthTable::indicator_from_bits(n, i % tables);
      b = TruthTable::indicator_from_bits(n, i / tables);
      h = a;
      id = "pair " + hex(i % tables) + "," + hex(i / tables);
    } else {
      Rng rng(derive_seed(opt.seed, i));
      a = random_integer_table(n, rng, 8);
      b = random_integer_table(n, rng, 8);
      h = random_indicator(n, rng);
      id = "sample " + std::to_string(i);
    }
    Spectrum sa = wht(a), sb = wht(b), sh = wht(h);
    Dyadic::Int cross = 0;
    for (std::uint32_t s = 0; s < sa.size(); ++s) cross += static_cast<Dyadic::Int>(sa.raw(s)) * sb.raw(s);
    if (inner_product(a, b) != Dyadic::from_raw(cross, 2u * static_cast<unsigned>(n)))
      return tally.fail(id + ": <a,b> differs from the spectral sum");
    if (spectral_mass(sa, DegreeFilter::all()) != inner_product(a, a))
      return tally.fail(id + ": Parseval fails");
    const Dyadic odd = spectral_mass(sh, DegreeFilter::odd());
    if (odd != (h.density() - inner_product(h, h.negated())) * Dyadic(1, 1))
      return tally.fail(id + ": odd mass differs from (alpha - <h, h(-x)>)/2");
  });
  return finish("plancherel", n, exhaustive ? count : 0, std::move(t), sw);
}

SuiteReport verify_olem(int n, const SuiteOptions& opt) {
  require_range("olem", n, 1, 8);
  Stopwatch sw;
  const bool exhaustive = n <= 2;
  const std::uint64_t strategies = pow_u64(static_cast<std::uint64_t>(n), cube_size(n));
  const std::uint64_t count = exhaustive ? strategies * strategies : samples_or(opt, 1000);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    std::string id;
    auto pair = [&] {
      if (exhaustive) {
        id = "pair " + std::to_string(i % strategies) + "," + std::to_string(i / strategies);
        return std::pair{decode_strategy(n, i % strategies), decode_strategy(n, i / strategies)};
      }
      id = "sample " + std::to_string(i);
      Rng rng(derive_seed(opt.seed, i));
      Strategy f = Strategy::random(n, rng);
      Strategy g = Strategy::random(n, rng);
      return std::pair{std::move(f), std::move(g)};
    }();
    const Strategy& f = pair.first;
    const Strategy& g = pair.second;
    LevelOneMatrix F = level_one_matrix(f), G = level_one_matrix(g);
    GameValue direct = eval_direct(f, g);
    GameValue fourier = eval_fourier(F, G);
    if (direct != fourier)
      return tally.fail(id + ": direct w " + direct.w.to_fraction() + " vs Fourier w " +
                        fourier.w.to_fraction());
    const double w = direct.w.to_double();
    if (std::abs(w) > std::sqrt(F.frobenius_squared() * G.frobenius_squared()) + kFloatTolerance)
      return tally.fail(id + ": Cauchy-Schwarz bound exceeded");
    if (direct.w < Dyadic(-1) || direct.w > Dyadic(1)) return tally.fail(id + ": w out of [-1, 1]");
  });
  return finish("olem", n, exhaustive ? count : 0, std::move(t), sw);
}

SuiteReport verify_chang(int n, const SuiteOptions& opt) {
  require_range("chang", n, 1, 6);
  Stopwatch sw;
  const bool exhaustive = n <= 4;
  const std::uint64_t count = exhaustive ? (std::uint64_t{1} << cube_size(n)) : samples_or(opt, 100000);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    TruthTable h = exhaustive ? TruthTable::indicator_from_bits(n, i) : [&] {
      Rng rng(derive_seed(opt.seed, i));
      return random_indicator(n, rng);
    }();
    const std::int64_t count1 = h.total();
    if (count1 == 0) return;  // alpha = 0: mass 0, bound 0 in the limit
    const std::string id = exhaustive ? "table " + hex(i) : "sample " + std::to_string(i);
    const Dyadic::Int mass = level_one_scaled(wht(h));
    // mass / 4^n <= (count1 / 2^n) / 2  <=>  2 mass <= count1 2^n
    if (2 * mass > static_cast<Dyadic::Int>(count1) << n)
      return tally.fail(id + ": level-one mass exceeds alpha/2");
    const double alpha = std::ldexp(static_cast<double>(count1), -n);
    const double mass_d = std::ldexp(static_cast<double>(mass), -2 * n);
    if (mass_d > bounds::chang_bound(alpha) + kFloatTolerance)
      return tally.fail(id + ": level-one mass exceeds 2 alpha^2 ln(1/alpha)");
  });
  return finish("chang", n, exhaustive ? count : 0, std::move(t), sw);
}

SuiteReport verify_bonus(int n, const SuiteOptions& opt) {
  require_range("bonus", n, 1, 4);
  Stopwatch sw;
  const std::uint64_t count = std::uint64_t{1} << cube_size(n);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    TruthTable h = TruthTable::indicator_from_bits(n, i);
    Spectrum sp = wht(h);
    const Dyadic alpha = h.density();
    const Dyadic level1 = spectral_mass(sp, DegreeFilter::level1());
    const Dyadic tail = spectral_mass(sp, DegreeFilter::odd_at_least3());
    const Dyadic odd = spectral_mass(sp, DegreeFilter::odd());
    if (level1 > alpha * Dyadic(1, 1) - tail)
      return tally.fail("table " + hex(i) + ": level-one mass exceeds alpha/2 - odd tail");
    if (odd != (alpha - inner_product(h, h.negated())) * Dyadic(1, 1))
      return tally.fail("table " + hex(i) + ": odd-mass identity fails");
  });
  return finish("bonus", n, count, std::move(t), sw);
}

SuiteReport verify_newlemma(int n, const SuiteOptions& opt) {
  require_range("newlemma", n, 1, 4);
  Stopwatch sw;
  // One ternary digit per antipodal pair {m, m ^ full} with m < 2^(n-1):
  // 0 = neither, 1 = m, 2 = its antipode.
  const std::uint32_t pairs = cube_size(n) / 2;
  const std::uint64_t count = pow_u64(3, pairs);
  const std::uint32_t full = full_mask(n);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    TruthTable a(n);
    std::uint64_t code = i;
    std::int64_t size = 0;
    for (std::uint32_t m = 0; m < pairs; ++m, code /= 3) {
      const auto digit = code % 3;
      if (digit == 1) a[m] = 1;
      if (digit == 2) a[m ^ full] = 1;
      size += digit != 0;
    }
    if (size == 0) return;  // empty set: tail 0, no bound
    const double beta = std::ldexp(static_cast<double>(size), -n);
    const double tail = spectral_mass(wht(a), DegreeFilter::odd_at_least3()).to_double();
    const double bound = bounds::antipodal_tail_lower_bound(beta);
    if (tail < bound - kFloatTolerance)
      return tally.fail("configuration " + std::to_string(i) + ": odd tail " +
                        bounds::format_decimal(tail) + " below bound " + bounds::format_decimal(bound));
  });
  return finish("newlemma", n, count, std::move(t), sw);
}

HalfspaceWitness halfspace_witness(int n, std::uint64_t set) {
  if (n < 1 || n > 6) throw std::invalid_argument("halfspace_witness: n must be in [1, 6]");
  const std::uint32_t size = cube_size(n);
  HalfspaceWitness w;
  w.set = set;
  std::vector<std::int64_t> z(static_cast<std::size_t>(n), 0);
  for (std::uint32_t m = 0; m < size; ++m)
    if ((set >> m) & 1u)
      for (int i = 0; i < n; ++i) z[i] += ((m >> i) & 1u) ? -1 : 1;
  for (auto v : z) w.z.push_back(Dyadic(v, static_cast<unsigned>(n)));

  // <x, z> scaled by 2^n.
  std::vector<std::int64_t> ip(size);
  for (std::uint32_t m = 0; m < size; ++m) {
    std::int64_t acc = 0;
    for (int i = 0; i < n; ++i) acc += ((m >> i) & 1u) ? -z[i] : z[i];
    ip[m] = acc;
  }
  const std::uint64_t target = size == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1) & set;
  if (target == 0) {
    w.is_halfspace = true;  // u = +infinity
    return w;
  }
  std::vector<std::int64_t> levels(ip);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (auto u : levels) {
    std::uint64_t s = 0;
    for (std::uint32_t m = 0; m < size; ++m)
      if (ip[m] >= u) s |= std::uint64_t{1} << m;
    if (s == target) {
      w.threshold_scaled = u;
      w.is_halfspace = true;
      return w;
    }
  }
  return w;
}

SuiteReport verify_halfspace(int n, const SuiteOptions& opt) {
  require_range("halfspace", n, 1, 4);
  Stopwatch sw;
  const std::uint32_t size = cube_size(n);
  const std::uint64_t count = std::uint64_t{1} << size;

  auto level_one = [&](std::uint64_t set) {
    std::int64_t mass = 0;
    for (int i = 0; i < n; ++i) {
      std::int64_t zi = 0;
      for (std::uint32_t m = 0; m < size; ++m)
        if ((set >> m) & 1u) zi += ((m >> i) & 1u) ? -1 : 1;
      mass += zi * zi;
    }
    return mass;
  };

  using Maxima = std::vector<std::int64_t>;
  auto partial_max = parallel_chunks<Maxima>(count, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Maxima best(size + 1, -1);
    for (std::uint64_t set = begin; set < end; ++set) {
      auto c = static_cast<std::size_t>(__builtin_popcountll(set));
      best[c] = std::max(best[c], level_one(set));
    }
    return best;
  });
  Maxima best(size + 1, -1);
  for (const auto& p : partial_max)
    for (std::size_t c = 0; c <= size; ++c) best[c] = std::max(best[c], p[c]);

  std::vector<std::uint64_t> maximizers_per_card(size + 1, 0);
  struct Pass {
    Tally tally;
    std::vector<std::uint64_t> per_card;
  };
  auto passes = parallel_chunks<Pass>(count, opt.threads, [&](std::uint64_t begin, std::uint64_t end) {
    Pass p;
    p.per_card.assign(size + 1, 0);
    for (std::uint64_t set = begin; set < end; ++set) {
      ++p.tally.checked;
      auto c = static_cast<std::size_t>(__builtin_popcountll(set));
      if (level_one(set) != best[c]) continue;
      ++p.per_card[c];
      if (!halfspace_witness(n, set).is_halfspace)
        p.tally.fail("set " + hex(set) + " (cardinality " + std::to_string(c) +
                     ") maximizes level-one mass but is not a halfspace");
    }
    return p;
  });
  Tally t;
  for (auto& p : passes) {
    t.checked += p.tally.checked;
    t.violations += p.tally.violations;
    for (auto& w : p.tally.witnesses)
      if (t.witnesses.size() < kMaxWitnesses) t.witnesses.push_back(std::move(w));
    for (std::size_t c = 0; c <= size; ++c) maximizers_per_card[c] += p.per_card[c];
  }
  SuiteReport r = finish("halfspace", n, count, std::move(t), sw);
  std::uint64_t total = std::accumulate(maximizers_per_card.begin(), maximizers_per_card.end(), std::uint64_t{0});
  r.notes.push_back("maximizers checked: " + std::to_string(total));
  return r;
}

SuiteReport verify_lemma7(int n, int k, double eps, const SuiteOptions& opt) {
  require_range("lemma7", n, 1, 8);
  if (k < 1 || k > n)
    throw std::invalid_argument("lemma7: k = " + std::to_string(k) + " outside [1, n]");
  if (!(eps > 0.0 && eps < 0.25)) throw std::invalid_argument("lemma7: eps outside (0, 1/4)");
  Stopwatch sw;
  const std::uint32_t size = cube_size(n);
  // Points where g is unrestricted; everywhere else g < k.
  const auto free_points = static_cast<std::uint32_t>(std::floor(eps * size));
  const double bound = bounds::restricted_range_bound(k, eps);
  if (k == 1) {
    Tally none;
    SuiteReport r = finish("lemma7", n, 0, std::move(none), sw);
    r.notes.push_back("infeasible: Pr{g >= 1} = 1 exceeds eps for every strategy");
    return r;
  }
  const std::uint64_t count = samples_or(opt, 1000);
  Tally t = run_indexed(count, opt.threads, [&](std::uint64_t i, Tally& tally) {
    ++tally.checked;
    Rng rng(derive_seed(opt.seed, i));
    std::vector<std::uint32_t> order(size);
    std::iota(order.begin(), order.end(), 0u);
    for (std::uint32_t j = 0; j < free_points; ++j)
      std::swap(order[j], order[j + rng.below(size - j)]);
    std::vector<std::uint8_t> gc(size);
    for (std::uint32_t j = 0; j < size; ++j) {
      const std::uint64_t range = j < free_points ? static_cast<std::uint64_t>(n)
                                                  : static_cast<std::uint64_t>(k - 1);
      gc[order[j]] = static_cast<std::uint8_t>(1 + rng.below(range));
    }
    Strategy g(n, std::move(gc));
    Strategy f = Strategy::random(n, rng);
    const std::string id = "sample " + std::to_string(i);

    std::uint32_t high = 0;
    for (std::uint32_t m = 0; m < size; ++m) high += g(m) >= k;
    if (high > eps * size) return tally.fail(id + ": sampler broke the hypothesis");

    const double w_random = eval_direct(f, g).w.to_double();
    const double w_best = eval_direct(best_response(level_one_matrix(g)), g).w.to_double();
    if (std::max(w_random, w_best) > bound + kFloatTolerance)
      return tally.fail(id + ": w " + bounds::format_decimal(std::max(w_random, w_best)) +
                        " exceeds " + bounds::format_decimal(bound));
  });
  SuiteReport r = finish("lemma7", n, 0, std::move(t), sw);
  r.notes.push_back("k = " + std::to_string(k) + ", eps = " + bounds::format_decimal(eps) +
                    ", bound " + bounds::format_decimal(bound) + ", unrestricted points " +
                    std::to_string(free_points));
  return r;
}

}  // namespace hatgame::verify
