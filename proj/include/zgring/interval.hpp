#pragma once

#include <string>

#include "zgring/zgamma.hpp"

namespace zgring {

/// Closed interval [lo, hi] with exact rational endpoints.
class RationalInterval {
 public:
  RationalInterval() = default;
  explicit RationalInterval(const Rational& x) : lo_(x), hi_(x) {}
  RationalInterval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational mid() const { return (lo_ + hi_) / 2; }

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const RationalInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
  bool excludes_zero() const { return lo_ > 0 || hi_ < 0; }
  /// Upper bound of |x| over the interval.
  Rational mag() const;

  /// Smallest outward rounding to dyadic endpoints with `bits` fractional bits.
  RationalInterval outward(unsigned long bits) const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const Rational& k, const RationalInterval& a);
  /// Requires b to exclude zero.
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);

  std::string to_string() const;

 private:
  Rational lo_ = 0;
  Rational hi_ = 0;
};

/// x^e for any integer e; negative e requires x to exclude zero.
RationalInterval pow(const RationalInterval& x, long e);

/// Enclosure of sqrt(x), x >= 0, with endpoints accurate to 2^-bits.
RationalInterval sqrt_enclosure(const Rational& x, unsigned long bits);
/// Enclosure of the golden ratio.
RationalInterval gamma_enclosure(unsigned long bits);
/// Enclosure of the real number m + n/gamma.
RationalInterval to_interval(const ZGamma& a, unsigned long bits);

std::string rational_string(const Rational& q);

}  // namespace zgring
