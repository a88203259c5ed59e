#include "hatgame/hypercube.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace hatgame {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension)
    throw std::invalid_argument("dimension n = " + std::to_string(n) +
                                " outside [1, " + std::to_string(kMaxDimension) + "]");
}

int character(SubsetMask S, PointMask x) {
  if (S.n != x.n) throw std::invalid_argument("character: dimension mismatch");
  return character_unchecked(S.s, x.m);
}

TruthTable::TruthTable(int n, std::vector<std::int64_t> values)
    : n_(n), values_(std::move(values)) {
  check_dimension(n);
  if (values_.size() != cube_size(n))
    throw std::invalid_argument("TruthTable: expected " + std::to_string(cube_size(n)) +
                                " entries, got " + std::to_string(values_.size()));
}

TruthTable::TruthTable(int n) : n_(n) {
  check_dimension(n);
  values_.assign(cube_size(n), 0);
}

TruthTable TruthTable::indicator_from_bits(int n, std::uint64_t bits) {
  if (n > 6) throw std::invalid_argument("indicator_from_bits: n must be <= 6");
  TruthTable t(n);
  for (std::uint32_t m = 0; m < cube_size(n); ++m) t.values_[m] = (bits >> m) & 1u;
  return t;
}

TruthTable TruthTable::dictator(int n, int i, int sign) {
  TruthTable t(n);
  if (i < 1 || i > n) throw std::invalid_argument("dictator: coordinate out of range");
  for (std::uint32_t m = 0; m < cube_size(n); ++m)
    t.values_[m] = (PointMask{n, m}.coord(i) == sign) ? 1 : 0;
  return t;
}

TruthTable TruthTable::negated() const {
  TruthTable r(n_);
  const std::uint32_t mask = full_mask(n_);
  for (std::uint32_t m = 0; m < values_.size(); ++m) r.values_[m] = values_[m ^ mask];
  return r;
}

std::int64_t TruthTable::total() const {
  return std::accumulate(values_.begin(), values_.end(), std::int64_t{0});
}

bool TruthTable::is_indicator() const {
  for (auto v : values_)
    if (v != 0 && v != 1) return false;
  return true;
}

Dyadic TruthTable::density() const { return Dyadic(total(), static_cast<unsigned>(n_)); }

Spectrum::Spectrum(int n, std::vector<std::int64_t> raw) : n_(n), raw_(std::move(raw)) {
  check_dimension(n);
  if (raw_.size() != cube_size(n))
    throw std::invalid_argument("Spectrum: expected " + std::to_string(cube_size(n)) +
                                " entries, got " + std::to_string(raw_.size()));
}

Dyadic Spectrum::coefficient(SubsetMask S) const {
  if (S.n != n_) throw std::invalid_argument("Spectrum::coefficient: dimension mismatch");
  return coefficient(S.s);
}

void walsh_hadamard_inplace(std::span<std::int64_t> data) {
  const std::size_t len = data.size();
  for (std::size_t half = 1; half < len; half <<= 1) {
    for (std::size_t block = 0; block < len; block += 2 * half) {
      for (std::size_t k = block; k < block + half; ++k) {
        std::int64_t a = data[k];
        std::int64_t b = data[k + half];
        data[k] = a + b;
        data[k + half] = a - b;
      }
    }
  }
}

Spectrum wht(const TruthTable& t) {
  std::vector<std::int64_t> raw(t.values().begin(), t.values().end());
  walsh_hadamard_inplace(raw);
  return Spectrum(t.n(), std::move(raw));
}

Spectrum wht_naive(const TruthTable& t) {
  if (t.n() > kMaxNaiveDimension)
    throw std::invalid_argument("wht_naive: n = " + std::to_string(t.n()) +
                                " exceeds the quadratic oracle limit " +
                                std::to_string(kMaxNaiveDimension));
  const std::uint32_t size = cube_size(t.n());
  std::vector<std::int64_t> raw(size, 0);
  for (std::uint32_t s = 0; s < size; ++s) {
    std::int64_t acc = 0;
    for (std::uint32_t m = 0; m < size; ++m) acc += t[m] * character_unchecked(s, m);
    raw[s] = acc;
  }
  return Spectrum(t.n(), std::move(raw));
}

TruthTable inverse_wht(const Spectrum& sp) {
  std::vector<std::int64_t> v(sp.raw().begin(), sp.raw().end());
  walsh_hadamard_inplace(v);
  const int n = sp.n();
  for (auto& x : v) {
    if (x % static_cast<std::int64_t>(cube_size(n)) != 0)
      throw std::invalid_argument("inverse_wht: spectrum is not the transform of an integer table");
    x >>= n;
  }
  return TruthTable(n, std::move(v));
}

Dyadic inner_product(const TruthTable& a, const TruthTable& b) {
  if (a.n() != b.n()) throw std::invalid_argument("inner_product: dimension mismatch");
  Dyadic::Int acc = 0;
  for (std::uint32_t m = 0; m < a.size(); ++m)
    acc += static_cast<Dyadic::Int>(a[m]) * b[m];
  return Dyadic::from_raw(acc, static_cast<unsigned>(a.n()));
}

DegreeFilter DegreeFilter::level1() { return DegreeFilter(1u << 1); }

DegreeFilter DegreeFilter::odd() { return DegreeFilter(0xAAAAAAAAu); }

DegreeFilter DegreeFilter::odd_at_least3() { return DegreeFilter(0xAAAAAAAAu & ~0x3u); }

DegreeFilter DegreeFilter::all() { return DegreeFilter(0xFFFFFFFFu); }

DegreeFilter DegreeFilter::degrees(std::initializer_list<int> ds) {
  std::uint32_t bits = 0;
  for (int d : ds) {
    if (d < 0 || d > kMaxDimension) throw std::invalid_argument("DegreeFilter: degree out of range");
    bits |= 1u << d;
  }
  return DegreeFilter(bits);
}

Dyadic::Int spectral_mass_scaled(const Spectrum& sp, DegreeFilter selector) {
  Dyadic::Int acc = 0;
  for (std::uint32_t s = 0; s < sp.size(); ++s) {
    if (!selector.accepts(__builtin_popcount(s))) continue;
    Dyadic::Int r = sp.raw(s);
    acc += r * r;
  }
  return acc;
}

Dyadic spectral_mass(const Spectrum& sp, DegreeFilter selector) {
  return Dyadic::from_raw(spectral_mass_scaled(sp, selector), 2u * static_cast<unsigned>(sp.n()));
}

}  // namespace hatgame
