#include "hatgame/dyadic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hatgame {

namespace {

constexpr unsigned kMaxExponent = 120;

Dyadic::Int abs128(Dyadic::Int v) { return v < 0 ? -v : v; }

Dyadic::Int checked_shl(Dyadic::Int v, unsigned k) {
  if (k == 0 || v == 0) return v;
  if (k >= 126 || (abs128(v) >> (126 - k)) != 0)
    throw std::overflow_error("Dyadic: numerator overflow");
  return v * (static_cast<Dyadic::Int>(1) << k);
}

}  // namespace

std::string int128_to_string(Dyadic::Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Work on the negative side so INT128_MIN does not overflow.
  if (!neg) v = -v;
  std::string digits;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' - d));
    v /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Dyadic::Dyadic(std::int64_t num, unsigned expo) : num_(num), expo_(expo) {
  normalize();
}

Dyadic Dyadic::from_raw(Int num, unsigned expo) {
  Dyadic d;
  d.num_ = num;
  d.expo_ = expo;
  d.normalize();
  return d;
}

void Dyadic::normalize() {
  if (num_ == 0) {
    expo_ = 0;
    return;
  }
  while (expo_ > 0 && (num_ & 1) == 0) {
    num_ /= 2;
    --expo_;
  }
  if (expo_ > kMaxExponent)
    throw std::overflow_error("Dyadic: exponent overflow");
}

double Dyadic::to_double() const {
  return std::ldexp(static_cast<double>(num_), -static_cast<int>(expo_));
}

std::string Dyadic::to_fraction() const {
  std::string s = int128_to_string(num_);
  if (expo_ == 0) return s;
  return s + "/" + int128_to_string(static_cast<Int>(1) << expo_);
}

Dyadic::Int Dyadic::scaled_to(unsigned expo) const {
  if (expo < expo_)
    throw std::invalid_argument("Dyadic::scaled_to: target exponent too small");
  return checked_shl(num_, expo - expo_);
}

Dyadic Dyadic::operator-() const { return from_raw(-num_, expo_); }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  unsigned e = std::max(a.expo_, b.expo_);
  Dyadic::Int x = a.scaled_to(e);
  Dyadic::Int y = b.scaled_to(e);
  Dyadic::Int r;
  if (__builtin_add_overflow(x, y, &r))
    throw std::overflow_error("Dyadic: numerator overflow");
  return Dyadic::from_raw(r, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  Dyadic::Int r;
  if (__builtin_mul_overflow(a.num_, b.num_, &r))
    throw std::overflow_error("Dyadic: numerator overflow");
  return Dyadic::from_raw(r, a.expo_ + b.expo_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace hatgame
