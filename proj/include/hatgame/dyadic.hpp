#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace hatgame {

/// Exact dyadic rational num / 2^expo.
///
/// Kept normalized: either expo == 0 or num is odd, so equal values have
/// equal representations. Arithmetic is exact; results that would not fit
/// in the 128-bit numerator throw std::overflow_error.
class Dyadic {
 public:
  using Int = __int128;

  constexpr Dyadic() = default;
  Dyadic(std::int64_t num, unsigned expo = 0);

  static Dyadic from_raw(Int num, unsigned expo);

  Int numerator() const { return num_; }
  unsigned exponent() const { return expo_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const;
  /// Reduced fraction, e.g. "5/16", "-1/4", "0", "3".
  std::string to_fraction() const;

  /// Numerator after rescaling to denominator 2^expo. Requires
  /// expo >= exponent().
  Int scaled_to(unsigned expo) const;

  Dyadic operator-() const;
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }
  Dyadic& operator-=(const Dyadic& o) { return *this = *this - o; }
  Dyadic& operator*=(const Dyadic& o) { return *this = *this * o; }

  /// Multiplies by 2^-k.
  Dyadic ldexp_neg(unsigned k) const { return from_raw(num_, expo_ + k); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.expo_ == b.expo_;
  }
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  void normalize();

  Int num_ = 0;
  unsigned expo_ = 0;
};

std::string int128_to_string(Dyadic::Int v);

}  // namespace hatgame
