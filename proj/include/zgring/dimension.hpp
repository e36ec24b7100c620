#pragma once

// Dimension of V_d(delta), the elements of degree <= d growing at most like
// |X_0^(0)|^delta, counted through the quads of maximal size.

#include <cstdint>
#include <string>
#include <vector>

#include "zgring/combinatorics.hpp"
#include "zgring/interval.hpp"
#include "zgring/zgamma.hpp"

namespace zgring {

/// num / den with den > 0; covers rationals (num.n = 0) and values such as gamma*d/8.
struct QGamma {
  ZGamma num;
  Integer den = 1;

  static QGamma rational(const Integer& p, const Integer& q);
  /// gamma * k / q.
  static QGamma gamma_times(const Integer& k, const Integer& q);
  /// Parses "p", "p/q", "m,n" or "m,n/q" (the last two meaning (m + n/gamma)/q).
  static QGamma parse(const std::string& text);

  int sign() const { return zgring::sign(num); }
  RationalInterval enclose(unsigned long bits) const;
  std::string to_string() const;
};

/// alpha <=> delta, exactly.
std::strong_ordering compare(const ZGamma& alpha, const QGamma& delta);

struct Contribution {
  Quad quad;
  std::int64_t weight = 0;  // 2 s + 1
};

struct DimensionReport {
  std::int64_t d = 0;
  QGamma delta;
  std::int64_t dim = 0;
  std::vector<Contribution> contributing;
};

inline constexpr std::int64_t kDimensionMaxDegree = 12;

/// 1 + sum of (2 s(q) + 1) over quads with d - 2f(i+1) < deg(q) <= d and value(q) <= delta.
DimensionReport dim_Vd(std::int64_t d, const QGamma& delta);

/// Sum over alpha in E_d with alpha <= delta of (2 s_d(alpha) + 1).
std::int64_t dim_Vd_direct(std::int64_t d, const QGamma& delta);

struct ScalingRow {
  std::int64_t d = 0;
  QGamma delta;
  std::int64_t dim = 0;
  RationalInterval power;       // (d delta)^(3/2)
  RationalInterval low_ratio;   // dim / (d delta)^(3/2)
  RationalInterval high_ratio;  // (dim - 1) / (d delta)^(3/2)
};

struct ScalingTable {
  std::vector<ScalingRow> rows;
  Rational low_min = 0;   // min of the lower endpoints of low_ratio
  Rational high_max = 0;  // max of the upper endpoints of high_ratio
};

/// Accepted band for the scaling ratios.
inline const Rational kRatioBandLow{1, 2};
inline const Rational kRatioBandHigh{5, 1};

ScalingTable scaling_report(const std::vector<std::pair<std::int64_t, QGamma>>& grid, unsigned long bits = 64);

/// d in 2..10 and delta in {gamma d/8, gamma d/4, gamma d/2, gamma d}.
std::vector<std::pair<std::int64_t, QGamma>> default_grid();

}  // namespace zgring
