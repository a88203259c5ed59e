#pragma once

// Functions on the Boolean hypercube {-1,1}^n and their Fourier spectra.
//
// Encoding (fixed, bit-exact): a point x is a mask m with bit (i-1) set iff
// x_i = -1, so m = 0 is the all-(+1) point and -x is m ^ (2^n - 1). A subset
// S of [n] is a mask s with bit (i-1) set iff i is in S. The character
// chi_S(x) is then (-1)^popcount(s & m).
//
// Spectra are stored unnormalized: raw[s] = sum_m t[m] * chi_s(m), and the
// Fourier coefficient is raw[s] / 2^n.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "hatgame/dyadic.hpp"

namespace hatgame {

inline constexpr int kMaxDimension = 24;
inline constexpr int kMaxNaiveDimension = 14;

/// Throws std::invalid_argument unless 1 <= n <= kMaxDimension.
void check_dimension(int n);

inline std::uint32_t cube_size(int n) { return std::uint32_t{1} << n; }
inline std::uint32_t full_mask(int n) { return cube_size(n) - 1; }

struct PointMask {
  int n = 1;
  std::uint32_t m = 0;

  PointMask negated() const { return {n, m ^ full_mask(n)}; }
  /// Coordinate i in [1, n] as +1 / -1.
  int coord(int i) const { return ((m >> (i - 1)) & 1u) ? -1 : 1; }
};

struct SubsetMask {
  int n = 1;
  std::uint32_t s = 0;

  int size() const { return __builtin_popcount(s); }
  bool contains(int i) const { return (s >> (i - 1)) & 1u; }
};

/// chi_S(x) = prod_{i in S} x_i.
int character(SubsetMask S, PointMask x);

inline int character_unchecked(std::uint32_t s, std::uint32_t m) {
  return (__builtin_popcount(s & m) & 1) ? -1 : 1;
}

/// Integer-valued function on {-1,1}^n, indexed by point mask.
/// Entries should stay below 2^38 in magnitude so every transform fits in
/// 64 bits at n = 24.
class TruthTable {
 public:
  TruthTable(int n, std::vector<std::int64_t> values);
  /// All-zero table.
  explicit TruthTable(int n);

  /// {0,1}-valued table whose support is given by the bits of `bits`
  /// (bit m set iff h(m) = 1). Requires 2^n <= 64.
  static TruthTable indicator_from_bits(int n, std::uint64_t bits);
  /// Indicator of a single coordinate value: 1{x_i = sign}.
  static TruthTable dictator(int n, int i, int sign = 1);

  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }
  std::int64_t operator[](std::uint32_t m) const { return values_[m]; }
  std::int64_t& operator[](std::uint32_t m) { return values_[m]; }
  std::span<const std::int64_t> values() const { return values_; }

  /// h(-x).
  TruthTable negated() const;
  /// Sum of all entries.
  std::int64_t total() const;
  bool is_indicator() const;
  /// Pr{h = 1} for an indicator table, as count / 2^n.
  Dyadic density() const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_;
  std::vector<std::int64_t> values_;
};

class Spectrum {
 public:
  Spectrum(int n, std::vector<std::int64_t> raw);

  int n() const { return n_; }
  std::size_t size() const { return raw_.size(); }
  /// Unnormalized coefficient, i.e. 2^n * hat h(S).
  std::int64_t raw(std::uint32_t s) const { return raw_[s]; }
  std::span<const std::int64_t> raw() const { return raw_; }
  Dyadic coefficient(std::uint32_t s) const { return Dyadic(raw_[s], static_cast<unsigned>(n_)); }
  Dyadic coefficient(SubsetMask S) const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  int n_;
  std::vector<std::int64_t> raw_;
};

/// Unnormalized in-place butterfly. Applying it twice multiplies every
/// entry by data.size().
void walsh_hadamard_inplace(std::span<std::int64_t> data);

/// Fast O(n 2^n) transform.
Spectrum wht(const TruthTable& t);
/// Direct O(4^n) summation; n <= kMaxNaiveDimension.
Spectrum wht_naive(const TruthTable& t);
/// Exact inverse of wht.
TruthTable inverse_wht(const Spectrum& sp);

/// <a, b> = E[a(X) b(X)].
Dyadic inner_product(const TruthTable& a, const TruthTable& b);

/// Selects subsets by their cardinality |S|.
class DegreeFilter {
 public:
  static DegreeFilter level1();
  static DegreeFilter odd();
  static DegreeFilter odd_at_least3();
  static DegreeFilter all();
  static DegreeFilter degrees(std::initializer_list<int> ds);

  bool accepts(int degree) const { return (bits_ >> degree) & 1u; }

 private:
  explicit DegreeFilter(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_;
};

/// sum over selected S of hat h(S)^2, exact (denominator 2^(2n)).
Dyadic spectral_mass(const Spectrum& sp, DegreeFilter selector);

/// Same mass scaled by 4^n, as an integer.
Dyadic::Int spectral_mass_scaled(const Spectrum& sp, DegreeFilter selector);

}  // namespace hatgame
