#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "hatgame/bounds.hpp"

namespace hatgame::bounds {

PublishedClaim make_claim(std::string label, std::string printed, ClaimKind kind,
                          double recomputed, double tolerance) {
  PublishedClaim c;
  c.label = std::move(label);
  c.printed = std::move(printed);
  c.printed_value = std::stod(c.printed);
  c.kind = kind;
  c.recomputed = recomputed;
  c.tolerance = tolerance;
  c.consistent = kind == ClaimKind::Approx ? std::abs(recomputed - c.printed_value) <= tolerance
                                           : recomputed <= c.printed_value + tolerance;
  return c;
}

bool BoundReport::has_discrepancy() const {
  return std::any_of(claims.begin(), claims.end(), [](const auto& c) { return !c.consistent; });
}

std::string BoundReport::to_text() const {
  std::ostringstream out;
  out << "== " << title << " ==\n";
  for (const auto& b : branches)
    out << "branch " << b.label << ": " << format_decimal(b.value) << "  (" << b.detail << ")\n";
  out << "W bound: " << format_decimal(w_bound) << "\n";
  out << "U bound: " << format_decimal(u_bound) << "  (= (1 + W) / 4)\n";
  out << "published vs recomputed:\n";
  for (const auto& c : claims) {
    out << "  " << c.label << ": published " << c.printed << ", recomputed "
        << format_decimal(c.recomputed) << ", "
        << (c.kind == ClaimKind::Approx ? "tolerance " : "slack ") << format_decimal(c.tolerance)
        << "  [" << (c.consistent ? "ok" : "DISCREPANCY") << "]\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  return out.str();
}

std::string BoundReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["title"] = title;
  doc["branches"] = nlohmann::ordered_json::array();
  for (const auto& b : branches)
    doc["branches"].push_back({{"label", b.label}, {"value", b.value}, {"detail", b.detail}});
  doc["w_bound"] = w_bound;
  doc["u_bound"] = u_bound;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const auto& c : claims)
    doc["claims"].push_back({{"label", c.label},
                             {"published", c.printed},
                             {"published_value", c.printed_value},
                             {"kind", c.kind == ClaimKind::Approx ? "approx" : "at_most"},
                             {"recomputed", c.recomputed},
                             {"tolerance", c.tolerance},
                             {"discrepancy", !c.consistent}});
  doc["notes"] = notes;
  doc["discrepancy"] = has_discrepancy();
  return doc.dump(2) + "\n";
}

BoundReport main_bound_report() {
  using C = BoundConstants;
  BoundReport r;
  r.title = "main bound (8 likeliest hats, tail .009079)";

  const double alpha_star = solve_alpha_star();
  const double b1 = restricted_range_bound(C::main_top + 1, C::main_tail);
  const ProfileOptimum po = profile_optimum(level1_bound, C::main_top, C::main_tail);
  const double b2 = po.value;

  r.branches.push_back({"restricted-range", b1, "Pr{g >= 9} <= .009079, k = 9"});
  r.branches.push_back({"level-one profile", b2,
                        "Cauchy-Schwarz with min(2a^2 ln(1/a), a/2), top 8, tail entry " +
                            format_decimal(po.tail_entry) + ", numeric route " +
                            format_decimal(po.numeric_value)});
  r.w_bound = std::max(b1, b2);
  r.u_bound = (1.0 + r.w_bound) / 4.0;

  r.claims.push_back(make_claim("alpha' (crossing of 2a^2 ln(1/a) and a/2)", ".116101",
                                ClaimKind::Approx, alpha_star, 1e-6));
  r.claims.push_back(make_claim("restricted-range branch", "0.4962356", ClaimKind::Approx, b1, 1e-7));
  r.claims.push_back(make_claim("profile branch (statement)", ".4962357", ClaimKind::AtMost, b2, 0));
  r.claims.push_back(make_claim("profile branch (proof value)", ".49626356", ClaimKind::Approx, b2, 1e-7));
  r.claims.push_back(make_claim("W <= 0.496235", "0.496235", ClaimKind::AtMost, r.w_bound, 0));
  r.claims.push_back(make_claim("U ≤ 0.37406", "0.37406", ClaimKind::AtMost, r.u_bound, 0));

  r.notes.push_back("branch gap |restricted-range - profile| = " + format_decimal(std::abs(b1 - b2)));
  return r;
}

BoundReport improved_bound_report() {
  using C = BoundConstants;
  BoundReport r;
  r.title = "improved bound (6 likeliest hats, tail .01270673)";

  const double eps = C::improved_tail;
  const double b1 = restricted_range_bound(C::improved_top + 1, eps);
  const ProfileOptimum po =
      profile_optimum(improved_level1_bound_worst_case, C::improved_top, eps);
  const double b2 = po.value;

  r.branches.push_back({"restricted-range", b1, "Pr{g >= 7} <= .01270673, k = 7"});
  r.branches.push_back(
      {"improved level-one profile", b2,
       "improved bound worst-cased over Pr{A}, top 6, residual entry scanned over [" +
           format_decimal(eps) + ", " + format_decimal(1.0 / (C::improved_top + 1)) +
           "], attained at " + format_decimal(po.tail_entry) + ", numeric route " +
           format_decimal(po.numeric_value)});
  r.w_bound = std::max(b1, b2);
  r.u_bound = (1.0 + r.w_bound) / 4.0;

  // Printed intermediate expressions, recomputed as written.
  auto three_entry = [](double s) { return (1.0 - 3.0 * s) / 2.0 + 3.0 * chang_bound(s); };
  double scan_arg = 0;
  const double scan_value = scan_max(three_entry, eps, 0.2, &scan_arg);
  const double five_entry = (1.0 - 5.0 * eps) / 2.0 + 5.0 * chang_bound(eps);

  r.claims.push_back(make_claim("restricted-range branch", "0.485169170625", ClaimKind::Approx, b1, 1e-12));
  r.claims.push_back(make_claim("U from restricted-range branch", "0.37129229325", ClaimKind::AtMost,
                                (1.0 + b1) / 4.0, 0));
  r.claims.push_back(make_claim("guard vs min(.089656^(1/(1-c)), (1/14.6)^(2/c))", ".000422",
                                ClaimKind::Approx, antipodal_guard_threshold(), 1e-5));
  r.claims.push_back(make_claim("max over s in [.01270673, 1/5] of (1-3s)/2 + 6 s^2 ln(1/s)",
                                "0.485169173", ClaimKind::AtMost, scan_value, 0));
  r.claims.push_back(make_claim("maximizing s of the three-entry scan", ".0168995",
                                ClaimKind::Approx, scan_arg, 1e-6));
  r.claims.push_back(make_claim("(1-5 eps)/2 + 10 eps^2 ln(1/eps)", "0.485169173",
                                ClaimKind::AtMost, five_entry, 0));
  r.claims.push_back(make_claim("final U (proof body)", "0.37129229325", ClaimKind::Approx, r.u_bound, 1e-6));
  r.claims.push_back(make_claim("final U (summary)", ".37193", ClaimKind::Approx, r.u_bound, 1e-6));
  r.claims.push_back(make_claim("improves U ≤ 0.37406", "0.37406", ClaimKind::AtMost, r.u_bound, 0));

  // Seven equal entries of 1/7 satisfy the tail constraint; even under the
  // most favorable reading (correction evaluated at Pr{A} = alpha) each keeps
  // nearly 1/14.
  const double seventh = 1.0 / 7.0;
  const double favorable =
      7.0 * std::min(chang_bound(seventh), seventh / 2.0 - antipodal_tail_lower_bound(seventh));
  r.notes.push_back("profile of seven entries 1/7 under the Pr{A} = alpha reading gives " +
                    format_decimal(favorable) + ", U " + format_decimal((1.0 + favorable) / 4.0));
  r.notes.push_back("three-entry scan value at s = .01270673: " + format_decimal(three_entry(eps)));
  return r;
}

}  // namespace hatgame::bounds
