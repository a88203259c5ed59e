#pragma once

// Brute-force certification of the hypercube identities and level-one
// bounds on small cubes. Every suite is deterministic in (n, samples, seed)
// and independent of the thread count.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatgame/dyadic.hpp"

namespace hatgame::verify {

inline constexpr std::size_t kMaxWitnesses = 10;

struct SuiteReport {
  std::string suite;
  int n = 0;
  std::uint64_t checked = 0;
  /// Enumeration size the suite is required to hit; 0 for sampled suites.
  std::uint64_t expected = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double elapsed_ms = 0;

  bool passed() const { return violations == 0 && (expected == 0 || checked == expected); }
  /// One summary line plus notes and witnesses. Timing only when requested.
  std::string to_text(bool with_timing = false) const;
  /// elapsed_ms is null unless with_timing.
  std::string to_json(bool with_timing = false) const;
};

struct SuiteOptions {
  std::uint64_t samples = 0;  // 0 = suite default
  std::uint64_t seed = 0;
  unsigned threads = 0;
};

/// wht vs the naive transform, double transform, negation law and inverse.
/// Exhaustive over all {0,1} tables for n <= 3, sampled for 4 <= n <= 14.
SuiteReport verify_wht(int n, const SuiteOptions& opt = {});

/// <a,b> = sum hat a hat b, Parseval, and the odd-mass identity.
/// Exhaustive over indicator pairs for n <= 2, sampled for n <= 14.
SuiteReport verify_plancherel(int n, const SuiteOptions& opt = {});

/// Direct and Fourier evaluation of W agree. Exhaustive for n <= 2,
/// sampled for n <= 8.
SuiteReport verify_olem(int n, const SuiteOptions& opt = {});

/// Level-one mass <= min(2a^2 ln(1/a), a/2): exhaustive for n <= 4,
/// sampled for n in {5, 6}.
SuiteReport verify_chang(int n, const SuiteOptions& opt = {});

/// Level-one mass <= a/2 - odd tail and the odd-mass identity; n <= 4.
SuiteReport verify_bonus(int n, const SuiteOptions& opt = {});

/// Odd tail of every antipodal-free set >= antipodal_tail_lower_bound; n <= 4.
SuiteReport verify_newlemma(int n, const SuiteOptions& opt = {});

/// A set of n-bit masks as a bitset over point indices.
struct HalfspaceWitness {
  std::uint64_t set = 0;
  /// z = E[X 1_A(X)], one entry per coordinate.
  std::vector<Dyadic> z;
  /// Threshold in units of 2^-n; empty means +infinity (A empty).
  std::optional<std::int64_t> threshold_scaled;
  bool is_halfspace = false;
};

/// Decides whether A = {x : <x, z> >= u} for some u, with z = E[X 1_A].
HalfspaceWitness halfspace_witness(int n, std::uint64_t set);

/// Every level-one maximizer at each cardinality is a halfspace; n <= 4.
SuiteReport verify_halfspace(int n, const SuiteOptions& opt = {});

/// W <= restricted_range_bound(k, eps) whenever Pr{g >= k} <= eps; n <= 8.
SuiteReport verify_lemma7(int n, int k, double eps, const SuiteOptions& opt = {});

}  // namespace hatgame::verify
