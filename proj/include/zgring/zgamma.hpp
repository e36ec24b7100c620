#pragma once

/**
 * @file zgamma.hpp
 * @brief Exact arithmetic in Z[gamma], gamma the golden ratio.
 *
 * An element is stored by its coordinates (m, n) in the basis {1, 1/gamma},
 * i.e. it stands for the real number m + n/gamma. Every predicate that
 * depends on the real embedding (sign, order) is decided with integer
 * arithmetic only.
 */

#include <compare>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace zgring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Two-sided Fibonacci function: f(0) = f(1) = 1, f(i+2) = f(i+1) + f(i) on all of Z.
Integer fib(long i);

/// Same as fib() for the range where the value fits in 64 bits (|i| <= 90).
std::int64_t fib64(long i);

/// Pair of naturals with the component-wise partial order.
struct BiDegree {
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;

  friend bool operator==(const BiDegree&, const BiDegree&) = default;
  /// (m, n) <= (m', n') iff m <= m' and n <= n'.
  bool fits_in(const BiDegree& bound) const { return d1 <= bound.d1 && d2 <= bound.d2; }
  BiDegree operator+(const BiDegree& o) const { return {d1 + o.d1, d2 + o.d2}; }
};

class ZGamma {
 public:
  ZGamma() = default;
  ZGamma(Integer m, Integer n) : m_(std::move(m)), n_(std::move(n)) {}
  ZGamma(long m, long n) : m_(m), n_(n) {}

  const Integer& m() const { return m_; }
  const Integer& n() const { return n_; }

  bool is_zero() const { return m_ == 0 && n_ == 0; }

  friend ZGamma operator+(const ZGamma& a, const ZGamma& b) { return {a.m_ + b.m_, a.n_ + b.n_}; }
  friend ZGamma operator-(const ZGamma& a, const ZGamma& b) { return {a.m_ - b.m_, a.n_ - b.n_}; }
  friend ZGamma operator-(const ZGamma& a) { return {-a.m_, -a.n_}; }
  friend ZGamma operator*(const Integer& k, const ZGamma& a) { return {k * a.m_, k * a.n_}; }
  // (m + n/g)(m' + n'/g) with 1/g^2 = 1 - 1/g
  friend ZGamma operator*(const ZGamma& a, const ZGamma& b) {
    Integer nn = a.n_ * b.n_;
    return {a.m_ * b.m_ + nn, a.m_ * b.n_ + a.n_ * b.m_ - nn};
  }

  friend bool operator==(const ZGamma& a, const ZGamma& b) { return a.m_ == b.m_ && a.n_ == b.n_; }
  /// Order of the real embedding.
  friend std::strong_ordering operator<=>(const ZGamma& a, const ZGamma& b);

  /// Floating approximation, for display only.
  double approx() const;
  std::string to_string() const;

 private:
  Integer m_ = 0;
  Integer n_ = 0;
};

/// Lexicographic order on (m, n); used for deterministic output, not the real order.
struct LexLess {
  bool operator()(const ZGamma& a, const ZGamma& b) const {
    int c = cmp(a.m(), b.m());
    return c != 0 ? c < 0 : a.n() < b.n();
  }
};

/// Exact sign of m + n/gamma as a real number.
int sign(const ZGamma& a);

std::strong_ordering compare(const ZGamma& a, const ZGamma& b);

/// Order of a against the rational p/q (q > 0).
std::strong_ordering compare_rational(const ZGamma& a, const Integer& p, const Integer& q);

/// gamma^{-i} = f(-i) + f(-i-1)/gamma.
ZGamma gamma_pow_neg(long i);

/// |m| + |n|.
std::int64_t degree(const ZGamma& a);
/// (|m|, |n|).
BiDegree bidegree(const ZGamma& a);

/// Sign of u + v*sqrt(5) for integers u, v.
int sign_sqrt5(const Integer& u, const Integer& v);

}  // namespace zgring
