#pragma once

// Sparse polynomials with rational coefficients in X0 X1 X2 X0* X1* X2* and
// the homogenizers U (total degree) and V, V* (bi-degree).

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "zgring/zgamma.hpp"

namespace zgring {

enum Var : int { X0 = 0, X1, X2, Y0, Y1, Y2, U, V, VS, kNumVars };

using Exponent = std::array<std::uint16_t, kNumVars>;

std::int64_t total_degree(const Exponent& e);
/// (degree in X0 X1 X2 V, degree in X0* X1* X2* V*).
BiDegree block_degree(const Exponent& e);

/// Strict "comes before" for descending graded lexicographic order, X0 > X1 > ... > V*.
struct GrLex {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using Terms = std::map<Exponent, Rational, GrLex>;

  MPoly() = default;
  explicit MPoly(const Rational& c);
  static MPoly var(Var v);
  static MPoly monomial(const Exponent& e, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of e, 0 if absent.
  Rational coeff(const Exponent& e) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const Rational& k, const MPoly& a);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  MPoly& operator+=(const MPoly& o);

  MPoly pow(unsigned e) const;

  /// -1 for the zero polynomial.
  std::int64_t total_degree() const;
  /// Component-wise maximum of block degrees.
  BiDegree bidegree() const;
  bool is_homogeneous() const;

  /// Multiply each term by U^(d - deg); requires total degree <= d.
  MPoly homogenize_total(std::int64_t d) const;
  /// Multiply each term by V^(d1 - deg_X) V*^(d2 - deg_X*); requires block degrees <= (d1, d2).
  MPoly homogenize_bi(std::int64_t d1, std::int64_t d2) const;

  /// Value at integer points; `values` is indexed by Var.
  Rational evaluate(std::span<const Integer> values) const;

  /// "c * X0^e0 X1^e1 ..." terms joined by " + ", largest monomial first.
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  Terms terms_;
};

/// All exponents of the given total degree in the listed variables, in decreasing GrLex order.
std::vector<Exponent> monomials_of_degree(std::span<const Var> vars, std::int64_t d);

/// Products of a monomial of degree n1 in {X, V} and one of degree n2 in {X*, V*}.
std::vector<Exponent> monomials_of_bidegree(std::int64_t n1, std::int64_t n2);

/// Monomials of degree d in X0..X2*, U.
std::vector<Exponent> monomials_total(std::int64_t d);

}  // namespace zgring
