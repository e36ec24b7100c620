#pragma once

/**
 * @file sequences.hpp
 * @brief Integer triples x_k in SL2 following x_{k+2} = x_{k+1} M_{k+1} x_k.
 *
 * A triple (x0, x1, x2) is identified with the symmetric matrix
 * [[x0, x1], [x1, x2]]. The transition matrix alternates: the product
 * x_{j+1} = x_j M_j x_{j-1} uses M for even j and its transpose for odd j.
 * The ratios x_{k,1}/x_{k,0} converge to a real number xi; the growth constant
 * theta = a11 + (a12 + a21) xi + a22 xi^2 governs x_{k+2,0} ~ theta x_{k+1,0} x_{k,0}.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zgring/interval.hpp"
#include "zgring/zgamma.hpp"

namespace zgring {

struct Mat2 {
  Integer a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  friend bool operator==(const Mat2&, const Mat2&) = default;
  Integer det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
  /// Adjugate; equals the inverse when det = 1.
  Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }
  bool is_symmetric() const { return a12 == a21; }
};

Mat2 operator*(const Mat2& a, const Mat2& b);

struct SymTriple {
  Integer x0 = 0, x1 = 0, x2 = 0;

  friend bool operator==(const SymTriple&, const SymTriple&) = default;
  Integer det() const { return x0 * x2 - x1 * x1; }
  Mat2 matrix() const { return {x0, x1, x1, x2}; }
  const Integer& operator[](int j) const;
};

/// Symmetric matrix to triple; empty when the matrix is not symmetric.
std::optional<SymTriple> as_triple(const Mat2& m);

/// det(x, y, z) of three triples viewed as rows.
Integer det3(const SymTriple& x, const SymTriple& y, const SymTriple& z);

struct TransitionMatrix {
  std::int64_t a11 = 0, a12 = 0, a21 = 0, a22 = 0;

  friend bool operator==(const TransitionMatrix&, const TransitionMatrix&) = default;
  std::int64_t det() const { return a11 * a22 - a12 * a21; }
  TransitionMatrix transpose() const { return {a11, a21, a12, a22}; }
  Mat2 matrix() const { return {a11, a12, a21, a22}; }
  bool is_symmetric() const { return a12 == a21; }
  bool is_skew_symmetric() const { return a11 == 0 && a22 == 0 && a12 == -a21; }
  /// det = 1, neither symmetric nor skew-symmetric.
  bool admissible() const { return det() == 1 && !is_symmetric() && !is_skew_symmetric(); }
  std::string to_string() const;
};

/// M_j, the matrix in x_{j+1} = x_j M_j x_{j-1}: M for even j, transpose for odd j.
TransitionMatrix step_matrix(const TransitionMatrix& m, long j);

struct Seed {
  SymTriple x1, x2;
  TransitionMatrix M;

  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Default window length.
inline constexpr std::size_t kDefaultWindow = 22;

/**
 * Exhaustive search for seeds with all entries in [-bound, bound]:
 * det(x1) = det(x2) = det(M) = 1, M admissible, x2 M x1 symmetric, and
 * |x_{k,0}| non-zero and strictly increasing for k = 1..8. Deterministic
 * order: lexicographic in (x1, x2, M). Returns at most `count` seeds.
 */
std::vector<Seed> find_seeds(int bound, std::size_t count);

/// Distinct transition matrices among find_seeds(bound, all), in search order.
std::vector<TransitionMatrix> seed_matrices(int bound);

class ExtremalSystem {
 public:
  /// window[0] is x_1. No consistency check happens here; see verify_conditions.
  ExtremalSystem(Seed seed, std::vector<SymTriple> window);

  const Seed& seed() const { return seed_; }
  std::size_t length() const { return window_.size(); }
  /// x_k for 1 <= k <= length().
  const SymTriple& x(long k) const;
  const std::vector<SymTriple>& window() const { return window_; }

  const std::optional<RationalInterval>& xi() const { return xi_; }
  const std::optional<RationalInterval>& theta() const { return theta_; }
  void set_enclosures(RationalInterval xi, RationalInterval theta);

 private:
  Seed seed_;
  std::vector<SymTriple> window_;
  std::optional<RationalInterval> xi_;
  std::optional<RationalInterval> theta_;
};

/// Builds x_1..x_K; fills the xi/theta enclosures when they certify (K >= 6).
ExtremalSystem generate(const Seed& seed, std::size_t K);

/**
 * Enclosure of xi centred at x_{K,1}/x_{K,0} with radius four times the last
 * ratio increment. Certified only if the enclosures built at K-2, K-1 and K
 * are nested and each contains every later ratio; otherwise throws
 * verification_error.
 */
RationalInterval xi_enclosure(const ExtremalSystem& sys);
/// xi_enclosure over the prefix x_1..x_K.
RationalInterval xi_enclosure(const ExtremalSystem& sys, std::size_t K);

/// a11 + (a12 + a21) xi + a22 xi^2 by interval arithmetic.
RationalInterval theta_from_xi(const TransitionMatrix& m, const RationalInterval& xi);
RationalInterval theta_enclosure(const ExtremalSystem& sys);

struct ExponentSample {
  long k = 0;
  double value = 0;
};

struct ConditionReport {
  std::size_t window = 0;
  std::vector<std::string> failures;  // exact failures; empty means E3/E4/recurrence hold

  std::vector<Integer> det2;  // det(x_k), k = 1..K
  std::vector<Integer> det3;  // det(x_k, x_{k+1}, x_{k+2}), k = 1..K-2
  bool det3_constant_abs = false;

  std::vector<ExponentSample> e1;  // log|x_{k+1,0}| / log|x_{k,0}|
  double e1_tail_deviation = 0;    // max |e1 - gamma| over the last four steps

  // upper bounds of |x_{k,0} xi - x_{k,1}| |x_{k,0}| and |x_{k,0} xi^2 - x_{k,2}| |x_{k,0}|
  // for k = 1..K-2, where the xi enclosure is fine enough to resolve them
  std::vector<ExponentSample> e2_first;
  std::vector<ExponentSample> e2_second;
  double e2_sup = 0;

  bool exact_ok() const { return failures.empty(); }
};

/// E1-E4 over the window; E3/E4 and the recurrence are checked exactly.
ConditionReport verify_conditions(const ExtremalSystem& sys);

/// Over the last `span` samples: the maximum of the later half is at most twice that of the earlier half.
bool no_growth_trend(const std::vector<ExponentSample>& samples, std::size_t span = 8);

/// Values x_{2k+i, j} for k_first <= k <= k_last (the germ X_j^(i) on a window).
std::vector<Integer> germ_window(const ExtremalSystem& sys, long i, int j, long k_first, long k_last);

/// Largest germ index k with 2k + i <= length().
long last_germ_index(const ExtremalSystem& sys, long i);

/// Element-wise exact ratios; throws std::domain_error naming the first zero denominator.
std::vector<Rational> ratio_check(std::span<const Integer> numerators, std::span<const Integer> denominators);

/// x_{2k+i,0} / (theta^{f(i+1)-1} x_{2k,0}^{f(i)} x_{2k-1,0}^{f(i-1)}), certified with the theta enclosure.
RationalInterval x0_growth_ratio(const ExtremalSystem& sys, long i, long k);

/// |c - 1| <= tol for every c in the interval.
bool within_of_one(const RationalInterval& ratio, const Rational& tol);

}  // namespace zgring
