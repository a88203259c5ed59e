#pragma once

// Closed-form bounds on level-one Fourier weight and the game value W, the
// constrained profile maximization that combines them, and reports that
// recompute every published constant next to its printed value.
//
// All logarithms are natural.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hatgame::bounds {

/// Published constants, verbatim.
struct BoundConstants {
  /// Crossing point of 2a^2 ln(1/a) and a/2 on (0, 1/2).
  static constexpr double alpha_star = 0.116101;
  /// Exponent parameter c of the antipodal-free tail bound.
  static constexpr double tail_exponent_c = 0.69;
  /// Hypothesis threshold of the antipodal-free tail bound.
  static constexpr double tail_guard = 0.000422;
  static constexpr double main_tail = 0.009079;
  static constexpr int main_top = 8;
  static constexpr double improved_tail = 0.01270673;
  static constexpr int improved_top = 6;
  static constexpr double improved_scan_point = 0.0168995;
};

/// 2 a^2 ln(1/a) for 0 < a <= 1.
double chang_bound(double alpha);

/// min(chang_bound(a), a/2).
double level1_bound(double alpha);

/// Root of a ln(1/a) = 1/4 on (1e-6, 1/2) by bisection to 1e-12.
double solve_alpha_star();

/// W bound when Pr{g(X) >= k} <= eps: 1/2 - (1 - 4 eps) 2^(1-k).
double restricted_range_bound(int k, double eps);

/// Lower bound on sum_{|S| >= 3 odd} hat 1_A(S)^2 for antipodal-free A with
/// Pr{A} = beta in (0, 1/2]: min(tail_guard, M(beta) / 4).
double antipodal_tail_lower_bound(double beta);

/// The three terms of M(beta), before the min and the factor 1/4.
struct AntipodalTailTerms {
  double small_set;
  double two_coordinate;
  double four_coordinate;
};
AntipodalTailTerms antipodal_tail_terms(double beta);

/// min(.089656^(1/(1-c)), (1/14.6)^(2/c)) at c = tail_exponent_c; the
/// threshold the guard constant is meant to round.
double antipodal_guard_threshold();

/// min(chang_bound(a), a/2 - antipodal_tail_lower_bound(b)) on the feasible
/// region 0 < a <= 1, max(0, 2a - 1) <= b <= min(a, 1/2). b = 0 (empty
/// antipodal part) contributes no correction.
double improved_level1_bound(double alpha, double beta);

/// improved_level1_bound worst-cased over every feasible beta for alpha;
/// level1_bound(alpha) when that range is empty (alpha > 3/4).
double improved_level1_bound_worst_case(double alpha);

using BoundFunction = std::function<double(double)>;

struct AlphaProfile {
  std::vector<double> alphas;

  double total() const;
  /// Sorted non-increasing, nonnegative, summing to 1 within tol.
  bool is_valid(double tol = 1e-12) const;
};

struct ProfileOptimum {
  double value = 0;
  AlphaProfile profile;
  /// Tail entry of the structured profile.
  double tail_entry = 0;
  double structure_value = 0;
  double numeric_value = 0;
  AlphaProfile numeric_profile;
};

/// Raised when the structured and the numeric maximizer disagree.
class ProfileDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kProfileAgreementTolerance = 1e-6;

/// Maximizes sum_j ub(a_j) over sorted profiles summing to 1 with
/// sum_{j > top} a_j >= tail.
///
/// Two independent routes: (a) the structured family of `top` equal entries
/// plus one residual entry s, scanned over s in [tail, 1/(top+1)]; (b) a
/// pairwise mass-transfer search over top + 2 free entries from several
/// starts. Returns (a) once (b) agrees within kProfileAgreementTolerance,
/// otherwise throws ProfileDisagreement. Requires top >= 1 and
/// 0 < tail <= 1/(top+1).
ProfileOptimum profile_optimum(const BoundFunction& ub, int top, double tail);

enum class ClaimKind { Approx, AtMost };

/// A printed constant next to its recomputation.
struct PublishedClaim {
  std::string label;
  std::string printed;
  double printed_value = 0;
  ClaimKind kind = ClaimKind::Approx;
  double recomputed = 0;
  double tolerance = 0;
  bool consistent = false;
};

PublishedClaim make_claim(std::string label, std::string printed, ClaimKind kind,
                          double recomputed, double tolerance);

struct BoundBranch {
  std::string label;
  double value = 0;
  std::string detail;
};

struct BoundReport {
  std::string title;
  std::vector<BoundBranch> branches;
  double w_bound = 0;
  double u_bound = 0;
  std::vector<PublishedClaim> claims;
  std::vector<std::string> notes;

  bool has_discrepancy() const;
  std::string to_text() const;
  std::string to_json() const;
};

/// Case split on Pr{g outside its 8 likeliest hats} against .009079.
BoundReport main_bound_report();

/// Same split with 6 hats and .01270673, using the improved level-one bound.
BoundReport improved_bound_report();

struct FigureRow {
  double pr_a;
  double solid;
  double dotted;
};

/// solid = level1_bound(b); dotted = min(chang_bound(b), b/2 -
/// antipodal_tail_lower_bound(b)).
std::vector<FigureRow> figure_curves(const std::vector<double>& grid);

/// step, 2 step, ... up to 1/2 inclusive.
std::vector<double> figure_grid(double step);

/// CSV with header pr_a,chang3,improved; 12 significant digits; LF endings.
std::string format_figure_csv(const std::vector<FigureRow>& rows);

/// Maximum of fn on [lo, hi]: a grid scan (endpoints included) refined by
/// golden-section search around the best grid point.
double scan_max(const std::function<double(double)>& fn, double lo, double hi,
                double* arg = nullptr, int grid = 2048);

/// %.12g
std::string format_decimal(double v);

}  // namespace hatgame::bounds
