#include "hatgame/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hatgame/rng.hpp"

namespace hatgame::bounds {

namespace {

constexpr double kScanTolerance = 1e-12;
constexpr int kMaxBisectionSteps = 200;
constexpr int kMaxGoldenSteps = 200;

void require_alpha(double alpha, const char* fn) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument(std::string(fn) + ": alpha = " + format_decimal(alpha) +
                                " outside (0, 1]");
}

double pow_or_zero(double base, double expo) { return base <= 0.0 ? 0.0 : std::pow(base, expo); }

// Golden-section maximization of a unimodal-on-[lo, hi] function.
double golden_max(const std::function<double(double)>& fn, double lo, double hi, double* arg) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = fn(c), fd = fn(d);
  for (int it = 0; it < kMaxGoldenSteps && (b - a) > kScanTolerance; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = fn(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = fn(d);
    }
  }
  double x = fc >= fd ? c : d;
  if (arg) *arg = x;
  return std::max(fc, fd);
}

}  // namespace

double scan_max(const std::function<double(double)>& fn, double lo, double hi, double* arg,
                int grid) {
  double best_x = lo, best = fn(lo);
  if (hi <= lo) {
    if (arg) *arg = lo;
    return best;
  }
  int best_k = 0;
  for (int k = 1; k <= grid; ++k) {
    double x = k == grid ? hi : lo + (hi - lo) * k / grid;
    double v = fn(x);
    if (v > best) {
      best = v;
      best_x = x;
      best_k = k;
    }
  }
  double a = lo + (hi - lo) * std::max(0, best_k - 1) / grid;
  double b = best_k + 1 >= grid ? hi : lo + (hi - lo) * (best_k + 1) / grid;
  double x;
  double v = golden_max(fn, a, b, &x);
  if (v > best) {
    best = v;
    best_x = x;
  }
  if (arg) *arg = best_x;
  return best;
}

double chang_bound(double alpha) {
  require_alpha(alpha, "chang_bound");
  if (alpha == 1.0) return 0.0;
  return 2.0 * alpha * alpha * std::log(1.0 / alpha);
}

double level1_bound(double alpha) {
  require_alpha(alpha, "level1_bound");
  return std::min(chang_bound(alpha), alpha / 2.0);
}

double solve_alpha_star() {
  // a ln(1/a) - 1/4 is negative at 1e-6 and positive at 1/2.
  auto h = [](double a) { return a * std::log(1.0 / a) - 0.25; };
  double lo = 1e-6, hi = 0.5;
  for (int it = 0; it < kMaxBisectionSteps && hi - lo > kScanTolerance; ++it) {
    double mid = 0.5 * (lo + hi);
    if (h(mid) < 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double restricted_range_bound(int k, double eps) {
  if (k < 1) throw std::invalid_argument("restricted_range_bound: k must be >= 1");
  if (!(eps > 0.0 && eps < 0.25))
    throw std::invalid_argument("restricted_range_bound: eps = " + format_decimal(eps) +
                                " outside (0, 1/4)");
  return 0.5 - (1.0 - 4.0 * eps) * std::ldexp(1.0, 1 - k);
}

AntipodalTailTerms antipodal_tail_terms(double beta) {
  if (!(beta > 0.0 && beta <= 0.5))
    throw std::invalid_argument("antipodal_tail_terms: beta = " + format_decimal(beta) +
                                " outside (0, 1/2]");
  const double c = BoundConstants::tail_exponent_c;
  AntipodalTailTerms t{};
  t.small_set = std::pow(2.0 * beta, 1.0 / c) * std::pow(38.0, -1.0 / c);
  if (beta < 0.25)
    t.two_coordinate =
        pow_or_zero((std::sqrt(4.0 + 136.0 * (0.5 - 2.0 * beta)) - 2.0) / 68.0, 2.0 / c);
  else
    t.two_coordinate =
        pow_or_zero((std::sqrt(4.0 - 160.0 * (0.5 - 2.0 * beta)) - 2.0) / 80.0, 2.0 / c);
  t.four_coordinate =
      beta < 0.5 ? pow_or_zero((std::sqrt(16.0 + 128.0 * (1.0 - 2.0 * beta)) - 4.0) / 64.0, 2.0 / c)
                 : 0.0;
  return t;
}

double antipodal_tail_lower_bound(double beta) {
  AntipodalTailTerms t = antipodal_tail_terms(beta);
  double m = std::min({t.small_set, t.two_coordinate, t.four_coordinate});
  return std::min(BoundConstants::tail_guard, 0.25 * m);
}

double antipodal_guard_threshold() {
  const double c = BoundConstants::tail_exponent_c;
  return std::min(std::pow(0.089656, 1.0 / (1.0 - c)), std::pow(1.0 / 14.6, 2.0 / c));
}

double improved_level1_bound(double alpha, double beta) {
  require_alpha(alpha, "improved_level1_bound");
  const double lo = std::max(0.0, 2.0 * alpha - 1.0);
  const double hi = std::min(alpha, 0.5);
  constexpr double slack = 1e-15;
  if (!(beta >= lo - slack && beta <= hi + slack))
    throw std::invalid_argument("improved_level1_bound: beta = " + format_decimal(beta) +
                                " outside [" + format_decimal(lo) + ", " + format_decimal(hi) +
                                "] for alpha = " + format_decimal(alpha));
  const double correction = beta <= 0.0 ? 0.0 : antipodal_tail_lower_bound(std::min(beta, 0.5));
  return std::min(chang_bound(alpha), alpha / 2.0 - correction);
}

double improved_level1_bound_worst_case(double alpha) {
  require_alpha(alpha, "improved_level1_bound_worst_case");
  const double lo = std::max(0.0, 2.0 * alpha - 1.0);
  const double hi = std::min(alpha, 0.5);
  // Empty range for alpha > 3/4: no correction applies.
  if (lo > hi) return level1_bound(alpha);
  // The bound is largest where the correction is smallest.
  std::vector<double> candidates{lo, hi};
  if (lo <= 0.25 && 0.25 <= hi) candidates.push_back(0.25);
  if (lo <= 0.5 && 0.5 <= hi) candidates.push_back(0.5);
  constexpr int grid = 1024;
  for (int k = 1; k < grid; ++k) candidates.push_back(lo + (hi - lo) * k / grid);
  double worst = -1.0;
  for (double b : candidates) {
    worst = std::max(worst, improved_level1_bound(alpha, b));
    if (worst >= std::min(chang_bound(alpha), alpha / 2.0)) break;
  }
  return worst;
}

double AlphaProfile::total() const {
  double s = 0;
  for (double a : alphas) s += a;
  return s;
}

bool AlphaProfile::is_valid(double tol) const {
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    if (alphas[j] < 0) return false;
    if (j > 0 && alphas[j] > alphas[j - 1] + tol) return false;
  }
  return std::abs(total() - 1.0) <= tol;
}

namespace {

double term(const BoundFunction& ub, double a) { return a <= 0.0 ? 0.0 : ub(std::min(a, 1.0)); }

double profile_value(const BoundFunction& ub, const std::vector<double>& a) {
  double s = 0;
  for (double x : a) s += term(ub, x);
  return s;
}

bool tail_satisfied(const std::vector<double>& a, int top, double tail) {
  std::vector<double> sorted(a);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double s = 0;
  for (std::size_t j = static_cast<std::size_t>(top); j < sorted.size(); ++j) s += sorted[j];
  return s >= tail - 1e-15;
}

double local_search(const BoundFunction& ub, std::vector<double>& a, int top, double tail) {
  const std::size_t d = a.size();
  for (double delta = 0.25; delta > 1e-13; delta *= 0.5) {
    bool improved = true;
    for (int sweep = 0; improved && sweep < 64; ++sweep) {
      improved = false;
      for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = 0; q < d; ++q) {
          // Repeat a productive transfer until it stops paying.
          while (p != q && a[p] > 0.0) {
            const double amount = std::min(delta, a[p]);
            const double np = a[p] - amount, nq = a[q] + amount;
            const double gain = term(ub, np) + term(ub, nq) - term(ub, a[p]) - term(ub, a[q]);
            if (gain <= 1e-15) break;
            const double op = a[p], oq = a[q];
            a[p] = np;
            a[q] = nq;
            if (!tail_satisfied(a, top, tail)) {
              a[p] = op;
              a[q] = oq;
              break;
            }
            improved = true;
          }
        }
      }
    }
  }
  return profile_value(ub, a);
}

}  // namespace

ProfileOptimum profile_optimum(const BoundFunction& ub, int top, double tail) {
  if (top < 1) throw std::invalid_argument("profile_optimum: top must be >= 1");
  if (!(tail > 0.0 && tail < 1.0))
    throw std::invalid_argument("profile_optimum: infeasible tail " + format_decimal(tail));
  const double hi = 1.0 / (top + 1);
  if (tail > hi + 1e-15)
    throw std::invalid_argument("profile_optimum: tail " + format_decimal(tail) +
                                " exceeds the largest single residual entry 1/(top+1)");

  ProfileOptimum out;

  // (a) top equal entries and one residual entry s.
  auto structured = [&](double s) { return top * term(ub, (1.0 - s) / top) + term(ub, s); };
  double s_best = tail;
  out.structure_value = scan_max(structured, tail, std::max(tail, hi), &s_best);
  out.tail_entry = s_best;
  out.profile.alphas.assign(static_cast<std::size_t>(top), (1.0 - s_best) / top);
  out.profile.alphas.push_back(s_best);

  // (b) free search over top + 2 entries.
  const std::size_t d = static_cast<std::size_t>(top) + 2;
  std::vector<std::vector<double>> starts;
  {
    std::vector<double> a(d, (1.0 - tail) / top);
    a[d - 2] = a[d - 1] = tail / 2.0;
    starts.push_back(a);
    if (2.0 / d >= tail) starts.emplace_back(d, 1.0 / d);
    Rng rng(0x5eedULL);
    for (int r = 0; r < 24; ++r) {
      std::vector<double> x(d);
      double sum = 0;
      for (auto& v : x) {
        v = -std::log(1.0 - rng.unit());
        sum += v;
      }
      for (auto& v : x) v /= sum;
      // Move toward the first start until the tail constraint holds; the
      // feasible set is convex.
      std::vector<double> y(d);
      for (int step = 0; step <= 10; ++step) {
        const double lam = step / 10.0;
        for (std::size_t j = 0; j < d; ++j) y[j] = (1 - lam) * x[j] + lam * starts[0][j];
        if (tail_satisfied(y, top, tail)) break;
      }
      starts.push_back(y);
    }
  }
  out.numeric_value = -1.0;
  for (auto& a : starts) {
    double v = local_search(ub, a, top, tail);
    if (v > out.numeric_value) {
      out.numeric_value = v;
      out.numeric_profile.alphas = a;
    }
  }
  std::sort(out.numeric_profile.alphas.begin(), out.numeric_profile.alphas.end(), std::greater<>());

  if (std::abs(out.structure_value - out.numeric_value) > kProfileAgreementTolerance)
    throw ProfileDisagreement("profile_optimum: structured value " +
                              format_decimal(out.structure_value) + " vs numeric value " +
                              format_decimal(out.numeric_value));
  out.value = out.structure_value;
  return out;
}

std::vector<FigureRow> figure_curves(const std::vector<double>& grid) {
  std::vector<FigureRow> rows;
  rows.reserve(grid.size());
  for (double b : grid) {
    if (!(b > 0.0 && b <= 0.5))
      throw std::invalid_argument("figure_curves: beta = " + format_decimal(b) +
                                  " outside (0, 1/2]");
    const double solid = level1_bound(b);
    const double dotted = std::min(chang_bound(b), b / 2.0 - antipodal_tail_lower_bound(b));
    rows.push_back({b, solid, dotted});
  }
  return rows;
}

std::vector<double> figure_grid(double step) {
  if (!(step > 0.0 && step <= 0.5))
    throw std::invalid_argument("figure_grid: step " + format_decimal(step) +
                                " outside (0, 1/2]");
  std::vector<double> grid;
  const double count = 0.5 / step;
  const long long n = std::llround(count);
  if (std::abs(count - static_cast<double>(n)) < 1e-9) {
    // Exact division: k / (2n) hits 1/4 and 1/2 without drift.
    for (long long k = 1; k <= n; ++k) grid.push_back(static_cast<double>(k) / (2.0 * n));
  } else {
    for (long long k = 1; k * step <= 0.5; ++k) grid.push_back(k * step);
  }
  return grid;
}

std::string format_decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << "pr_a,chang3,improved\n";
  for (const auto& r : rows)
    out << format_decimal(r.pr_a) << ',' << format_decimal(r.solid) << ','
        << format_decimal(r.dotted) << '\n';
  return out.str();
}

}  // namespace hatgame::bounds
