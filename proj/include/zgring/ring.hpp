#pragma once

/**
 * @file ring.hpp
 * @brief The ring generated by the approximation triples X^(0), X^(-1).
 *
 * Polynomials live in Q[X, X*] (plus U or V, V* for homogenized quotients).
 * The coordinates of every triple X^(i) are polynomials in X = X^(0) and
 * X* = X^(-1). Quotient computations work one homogeneous component at a
 * time: the degree-n part of a homogeneous ideal is spanned by the products
 * of its generators with monomials of complementary degree.
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zgring/combinatorics.hpp"
#include "zgring/echelon.hpp"
#include "zgring/interval.hpp"
#include "zgring/mpoly.hpp"
#include "zgring/sequences.hpp"

namespace zgring {

using CoordTriple = std::array<MPoly, 3>;

/// Default limit on |i| for coordinate polynomials (the number of terms grows doubly exponentially).
inline constexpr long kCoordPolyBound = 7;
inline constexpr std::int64_t kHilbertTotalBound = 5;
inline constexpr std::int64_t kHilbertBiBound = 4;
inline constexpr std::int64_t kBasisTotalBound = 3;
inline constexpr std::int64_t kBasisBiBound = 2;

MPoly det_X();
MPoly det_Xstar();
/// (X M X*)_(1,0) - (X M X*)_(0,1): zero exactly when the product is symmetric.
MPoly phi(const TransitionMatrix& m);

/**
 * Coordinate polynomials of X^(i) in terms of X = X^(0) and X* = X^(-1),
 * memoized per instance. Forward: X^(i+2) = X^(i+1) M_(i+1) X^(i).
 * Backward: X^(i) = Adj(X^(i+1) M_(i+1)) X^(i+2). The matrix products are
 * symmetric only modulo the ideal; the (0,1) entry is taken as coordinate 1.
 */
class CoordinatePolys {
 public:
  explicit CoordinatePolys(TransitionMatrix m, long bound = kCoordPolyBound);

  const CoordTriple& operator()(long i);
  const TransitionMatrix& matrix() const { return m_; }
  long bound() const { return bound_; }

 private:
  TransitionMatrix m_;
  long bound_;
  std::map<long, CoordTriple> cache_;
};

/// Standalone version of CoordinatePolys(m, bound)(i).
CoordTriple coord_polys(long i, const TransitionMatrix& m, long bound = kCoordPolyBound);

enum class IdealKind { I, I1, I2 };

struct Ideal {
  IdealKind kind = IdealKind::I;
  std::vector<MPoly> generators;  // det(X) - c, det(X*) - c*, Phi
};

Ideal ideal(IdealKind kind, const TransitionMatrix& m);

/// Closed forms of the Hilbert functions.
Integer hilbert_I1_closed(std::int64_t d);
Integer hilbert_I2_closed(std::int64_t d1, std::int64_t d2);

struct HilbertResult {
  std::int64_t monomials = 0;  // dimension of the homogeneous component of the ambient ring
  std::int64_t ideal_rank = 0;
  std::int64_t computed = 0;   // monomials - ideal_rank
  Integer expected = 0;
  bool match() const { return Integer(computed) == expected; }
};

HilbertResult hilbert_I1(std::int64_t d, const TransitionMatrix& m, std::int64_t max_degree = kHilbertTotalBound);
HilbertResult hilbert_I2(std::int64_t d1, std::int64_t d2, const TransitionMatrix& m,
                         std::int64_t max_degree = kHilbertBiBound);

/// Rank of the same ideal component modulo a prime, for cross-checking.
std::int64_t ideal_rank_mod_p_I1(std::int64_t d, const TransitionMatrix& m, std::uint32_t p = kDefaultPrime);
std::int64_t ideal_rank_mod_p_I2(std::int64_t d1, std::int64_t d2, const TransitionMatrix& m,
                                 std::uint32_t p = kDefaultPrime);

struct DegreeBound {
  enum class Kind { Total, Bi };
  Kind kind = Kind::Total;
  std::int64_t d = 0;   // Total
  std::int64_t d1 = 0;  // Bi
  std::int64_t d2 = 0;

  static DegreeBound total(std::int64_t d);
  static DegreeBound bi(std::int64_t d1, std::int64_t d2);

  bool contains(const ZGamma& alpha) const;
  /// s_d(alpha) or s_(d1,d2)(alpha).
  std::int64_t size_of(const ZGamma& alpha) const;
  /// Quad of maximal size for alpha under the bound; empty for alpha = 0.
  std::optional<Quad> quad_of(const ZGamma& alpha) const;
  /// E_d or E_(d1,d2).
  std::vector<ZGamma> elements() const;
  /// (4d^3+6d^2+8d+3)/3 or (d1+d2+1)(2d1d2+d1+d2+1).
  Integer dimension() const;
  std::string to_string() const;
};

struct MonomialElement {
  ZGamma alpha;
  std::int64_t j = 0;
  std::int64_t size = 0;             // s(alpha) relative to the bound
  std::optional<Quad> quad;          // empty for alpha = 0
  std::vector<std::int64_t> indices; // i_1 <= ... <= i_s
  std::vector<int> coords;           // j_1, ..., j_s
  MPoly poly;
  DegreeBound bound;
};

/// prod_k X_(j_k)^(-i_k), the j_k filled greedily with 2s and then a single 1.
MonomialElement build_monomial(const ZGamma& alpha, std::int64_t j, const DegreeBound& bound, CoordinatePolys& coords);

/// All M_(alpha,j) for alpha in the bound's E-set (lexicographic) and 0 <= j <= 2 s(alpha).
std::vector<MonomialElement> monomial_family(const DegreeBound& bound, CoordinatePolys& coords);

/// P evaluated at X = x_(2k), X* = x_(2k-1) and homogenizers 1.
Rational evaluate_at_germ(const MPoly& p, const ExtremalSystem& sys, long k);

struct BasisReport {
  DegreeBound bound;
  std::int64_t cardinality = 0;
  Integer expected = 0;
  std::int64_t ambient = 0;      // monomials in the homogeneous component
  std::int64_t ideal_rank = 0;
  std::int64_t family_rank = 0;  // rank of the family modulo the ideal
  std::vector<Rational> certificate;  // a vanishing family combination, empty if full rank

  bool full() const { return Integer(family_rank) == expected && Integer(cardinality) == expected; }
};

/// The family M_(alpha,j) as a basis of the homogeneous quotient by I1 (total) or I2 (bi).
class QuotientBasis {
 public:
  /// Throws bound_exceeded past max_total (total bounds) or max_bi (each bi-degree component).
  QuotientBasis(const DegreeBound& bound, const TransitionMatrix& m, std::int64_t max_total = kBasisTotalBound,
                std::int64_t max_bi = kBasisBiBound);

  const DegreeBound& bound() const { return bound_; }
  const std::vector<MonomialElement>& family() const { return family_; }
  const BasisReport& report() const { return report_; }

  /// Coordinates of P + I in the family; P must fit the bound.
  std::vector<Rational> reduce(const MPoly& p) const;

 private:
  SparseRow to_row(const MPoly& homogeneous, Integer* denominator) const;
  MPoly homogenize(const MPoly& p) const;

  DegreeBound bound_;
  TransitionMatrix m_;
  std::vector<MonomialElement> family_;
  std::map<Exponent, std::size_t, GrLex> columns_;
  Echelon echelon_;
  BasisReport report_;
};

BasisReport basis_rank_check(const DegreeBound& bound, const TransitionMatrix& m,
                             std::int64_t max_total = kBasisTotalBound, std::int64_t max_bi = kBasisBiBound);

/// Coordinates of P + I in the degree-d family.
std::vector<Rational> reduce_mod_I(const MPoly& p, std::int64_t d, const TransitionMatrix& m);

struct LeadingTerm {
  ZGamma alpha;                  // largest alpha with a non-zero coordinate
  std::int64_t size = 0;         // s(alpha)
  std::vector<Rational> A;       // A(T) = sum A[j] T^j
};

/// Throws std::domain_error ("valuation undefined") for zero coordinates.
LeadingTerm leading_exponent(const std::vector<Rational>& coords, const QuotientBasis& basis);
LeadingTerm leading_exponent(const MPoly& p, const QuotientBasis& basis);

/**
 * value / (theta^(m+n-s) A(xi) x_(2k,0)^m x_(2k-1,0)^n) as an interval, using
 * the certified enclosures of the system.
 */
RationalInterval asymptotic_ratio(const Rational& value, const ExtremalSystem& sys, long k, const ZGamma& alpha,
                                  std::int64_t s, const std::vector<Rational>& A);

}  // namespace zgring
