#include <doctest.h>

#include <cmath>

#include "hatgame/bounds.hpp"

using namespace hatgame::bounds;

TEST_SUITE("bounds") {
  TEST_CASE("level-one bound pieces") {
    CHECK(chang_bound(1.0) == 0.0);
    CHECK(std::abs(chang_bound(BoundConstants::alpha_star) - 0.0580505) < 1e-6);
    CHECK(std::abs(chang_bound(std::exp(-1.0)) - 2.0 * std::exp(-2.0)) < 1e-15);
    CHECK(std::abs(chang_bound(std::exp(-1.0)) - 0.270671) < 1e-6);
    CHECK(level1_bound(0.5) == 0.25);
    CHECK(std::abs(chang_bound(0.009079) - 7.751e-4) < 1e-7);
    const double r = solve_alpha_star();
    CHECK(std::abs(level1_bound(r) - r / 2) < 1e-9);
    CHECK(std::abs(chang_bound(r) - r / 2) < 1e-10);
    CHECK((chang_bound(r - 1e-4) - (r - 1e-4) / 2) * (chang_bound(r + 1e-4) - (r + 1e-4) / 2) < 0);
    CHECK(std::abs(r - 0.116101) < 1e-6);
    CHECK_THROWS_AS(chang_bound(0.0), std::invalid_argument);
    CHECK_THROWS_AS(level1_bound(1.5), std::invalid_argument);
  }

  TEST_CASE("level-one bound is below both pieces on a grid") {
    for (int k = 1; k <= 10000; ++k) {
      const double a = k / 10000.0;
      REQUIRE(level1_bound(a) <= a / 2);
      REQUIRE(level1_bound(a) <= chang_bound(a));
    }
  }

  TEST_CASE("restricted-range bound") {
    CHECK(std::abs(restricted_range_bound(9, 0.009079) - 0.4962356) < 1e-7);
    CHECK(std::abs(restricted_range_bound(7, 0.01270673) - 0.485169170625) < 1e-15);
    CHECK(std::abs(restricted_range_bound(3, 0.25 - 1e-12) - 0.5) < 1e-11);
    for (int k = 1; k <= 12; ++k)
      for (double e = 0.001; e < 0.25; e += 0.01) {
        REQUIRE(restricted_range_bound(k, e) < 0.5);
        REQUIRE(restricted_range_bound(k, e) < restricted_range_bound(k, e + 0.005));
        REQUIRE(restricted_range_bound(k, e) < restricted_range_bound(k + 1, e));
      }
    CHECK_THROWS_AS(restricted_range_bound(0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(restricted_range_bound(3, 0.25), std::invalid_argument);
  }

  TEST_CASE("antipodal-free tail bound") {
    CHECK(antipodal_tail_lower_bound(0.25) == 0.0);
    CHECK(antipodal_tail_lower_bound(0.5) == 0.0);
    const AntipodalTailTerms t = antipodal_tail_terms(0.1);
    CHECK(t.small_set > 0);
    CHECK(t.two_coordinate > 0);
    CHECK(t.four_coordinate > 0);
    CHECK(antipodal_tail_lower_bound(0.1) > 0);
    CHECK(std::abs(antipodal_guard_threshold() - BoundConstants::tail_guard) < 1e-5);

    double prev = antipodal_tail_lower_bound(1e-4);
    for (int k = 1; k <= 5000; ++k) {
      const double b = k / 10000.0;
      const double v = antipodal_tail_lower_bound(b);
      REQUIRE(v >= 0.0);
      REQUIRE(v <= BoundConstants::tail_guard);
      REQUIRE(std::abs(v - prev) < 1e-2);
      prev = v;
    }
    CHECK_THROWS_AS(antipodal_tail_terms(0.0), std::invalid_argument);
    CHECK_THROWS_AS(antipodal_tail_terms(0.6), std::invalid_argument);
  }

  TEST_CASE("improved level-one bound") {
    CHECK(std::abs(improved_level1_bound(0.5, 0.5) - 0.25) < 1e-12);
    CHECK(std::abs(improved_level1_bound(0.5, 0.25) - level1_bound(0.5)) < 1e-12);
    CHECK(improved_level1_bound_worst_case(0.2) <= level1_bound(0.2));
    for (int i = 1; i <= 200; ++i) {
      const double a = i / 200.0;
      const double lo = std::max(0.0, 2 * a - 1), hi = std::min(a, 0.5);
      if (lo > hi) {
        REQUIRE(improved_level1_bound_worst_case(a) == level1_bound(a));
        continue;
      }
      for (int j = 0; j <= 20; ++j) {
        const double b = lo + (hi - lo) * j / 20;
        REQUIRE(improved_level1_bound(a, b) <= level1_bound(a));
      }
    }
    CHECK(improved_level1_bound(0.2, 0.2) < level1_bound(0.2));
    CHECK_THROWS_AS(improved_level1_bound(0.2, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(improved_level1_bound(0.8, 0.2), std::invalid_argument);
  }

  TEST_CASE("profile optimum") {
    const ProfileOptimum main = profile_optimum(level1_bound, 8, 0.009079);
    CHECK(std::abs(main.value - 0.496236) < 1e-5);
    CHECK(std::abs(main.tail_entry - 0.009079) < 1e-9);
    CHECK(std::abs(main.structure_value - main.numeric_value) <= kProfileAgreementTolerance);
    CHECK(main.profile.is_valid(1e-9));
    CHECK(main.numeric_profile.is_valid(1e-9));

    const ProfileOptimum tiny = profile_optimum(level1_bound, 8, 1e-9);
    CHECK(std::abs(tiny.value - 0.5) < 1e-6);

    const ProfileOptimum improved = profile_optimum(improved_level1_bound_worst_case, 6, 0.01270673);
    CHECK(std::abs(improved.structure_value - improved.numeric_value) <= kProfileAgreementTolerance);

    CHECK_THROWS_AS(profile_optimum(level1_bound, 0, 0.01), std::invalid_argument);
    CHECK_THROWS_AS(profile_optimum(level1_bound, 8, 0.2), std::invalid_argument);
  }

  TEST_CASE("main report") {
    const BoundReport r = main_bound_report();
    REQUIRE(r.branches.size() == 2);
    CHECK(std::abs(r.branches[0].value - 0.4962356) < 1e-7);
    CHECK(std::abs(r.branches[1].value - 0.4962356) < 1e-7);
    CHECK(std::abs(r.branches[0].value - r.branches[1].value) < 2e-7);
    CHECK(r.w_bound <= 0.4962357);
    CHECK(r.u_bound <= 0.37406);
    CHECK(r.to_text().find("U ≤ 0.37406: published 0.37406, recomputed 0.37405890") != std::string::npos);
    CHECK(r.has_discrepancy());  // the proof's .49626356
    CHECK(r.to_json().find("\"discrepancy\": true") != std::string::npos);
  }

  TEST_CASE("improved report") {
    const BoundReport r = improved_bound_report();
    CHECK(std::abs(r.branches[0].value - 0.485169170625) < 1e-15);
    const std::string text = r.to_text();
    CHECK(text.find("published .37193") != std::string::npos);
    CHECK(text.find("published 0.37129229325") != std::string::npos);
    // Sound recomputation: at least the restricted-range branch.
    CHECK(r.u_bound >= (1 + r.branches[0].value) / 4);
    CHECK(r.u_bound <= 0.375);
  }

  TEST_CASE("figure data") {
    const auto grid = figure_grid(1e-4);
    CHECK(grid.size() == 5000);
    CHECK(grid.front() == 1e-4);
    CHECK(grid.back() == 0.5);
    CHECK(grid[2499] == 0.25);
    const auto rows = figure_curves(grid);
    for (const auto& row : rows) REQUIRE(row.dotted <= row.solid);
    CHECK(std::abs(rows[2499].dotted - 0.125) < 1e-10);
    CHECK(std::abs(rows[2499].solid - 0.125) < 1e-10);
    CHECK(std::abs(rows.back().dotted - 0.25) < 1e-10);
    const auto at_star = figure_curves({0.116101})[0];
    CHECK(std::abs(at_star.solid - 0.0580505) < 1e-6);
    CHECK(at_star.dotted <= at_star.solid);

    const std::string csv = format_figure_csv(figure_curves(figure_grid(0.25)));
    CHECK(csv == "pr_a,chang3,improved\n0.25,0.125,0.125\n0.5,0.25,0.25\n");
    CHECK_THROWS_AS(figure_grid(0.0), std::invalid_argument);
  }

  TEST_CASE("scan and formatting helpers") {
    double arg = 0;
    const double v = scan_max([](double x) { return -(x - 0.3) * (x - 0.3); }, 0.0, 1.0, &arg);
    CHECK(std::abs(arg - 0.3) < 1e-9);
    CHECK(std::abs(v) < 1e-15);
    CHECK(format_decimal(0.1) == "0.1");
    CHECK(format_decimal(0.37405890519123) == "0.374058905191");
  }
}
