#include "zgring/dimension.hpp"

#include <algorithm>
#include <stdexcept>

#include "zgring/errors.hpp"

namespace zgring {

QGamma QGamma::rational(const Integer& p, const Integer& q) {
  if (q <= 0) throw std::invalid_argument("QGamma: denominator must be positive");
  return {ZGamma(p, Integer(0)), q};
}

QGamma QGamma::gamma_times(const Integer& k, const Integer& q) {
  if (q <= 0) throw std::invalid_argument("QGamma: denominator must be positive");
  return {k * ZGamma(1L, 1L), q};  // gamma = 1 + 1/gamma
}

QGamma QGamma::parse(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw std::invalid_argument("cannot parse number '" + s + "' in '" + text + "'");
    return v;
  };
  std::string head = text;
  Integer den = 1;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    head = text.substr(0, slash);
    den = to_int(text.substr(slash + 1));
  }
  if (den <= 0) throw std::invalid_argument("denominator must be positive in '" + text + "'");
  if (auto comma = head.find(','); comma != std::string::npos)
    return {ZGamma(to_int(head.substr(0, comma)), to_int(head.substr(comma + 1))), den};
  return {ZGamma(to_int(head), Integer(0)), den};
}

RationalInterval QGamma::enclose(unsigned long bits) const {
  Rational inv(Integer(1), den);
  return inv * to_interval(num, bits);
}

std::string QGamma::to_string() const {
  std::string s = num.n() == 0 ? num.m().get_str() : "(" + num.to_string() + ")";
  return den == 1 ? s : s + "/" + den.get_str();
}

std::strong_ordering compare(const ZGamma& alpha, const QGamma& delta) {
  return compare(delta.den * alpha, delta.num);
}

namespace {

void check_range(std::int64_t d, const QGamma& delta) {
  if (d < 1) throw std::invalid_argument("dim_Vd: d must be >= 1");
  if (d > kDimensionMaxDegree) throw bound_exceeded("dim_Vd: d above " + std::to_string(kDimensionMaxDegree));
  if (delta.sign() <= 0) throw std::domain_error("dim_Vd: delta must be positive");
  const QGamma top = QGamma::gamma_times(Integer(static_cast<long>(d)), 1);
  if (compare(delta.num, delta.den * top.num) > 0) throw std::domain_error("dim_Vd: delta must be <= gamma d");
}

}  // namespace

DimensionReport dim_Vd(std::int64_t d, const QGamma& delta) {
  check_range(d, delta);
  DimensionReport rep;
  rep.d = d;
  rep.delta = delta;
  rep.dim = 1;
  for (std::int64_t i = 0; fib64(i) <= d; ++i) {
    const std::int64_t fi = fib64(i), f1 = fib64(i + 1), f2 = fib64(i + 2);
    for (std::int64_t a = 1; a * fi <= d; ++a)
      for (std::int64_t c = 0; a * fi + c * f2 <= d; ++c)
        for (std::int64_t b = 0; a * fi + b * f1 + c * f2 <= d; ++b) {
          if (a * fi + b * f1 + c * f2 <= d - 2 * f1) continue;
          const Quad q{i, a, b, c};
          if (compare(q.value(), delta) > 0) continue;
          rep.contributing.push_back({q, 2 * q.size() + 1});
          rep.dim += 2 * q.size() + 1;
        }
  }
  return rep;
}

std::int64_t dim_Vd_direct(std::int64_t d, const QGamma& delta) {
  check_range(d, delta);
  std::int64_t dim = 0;
  for (const auto& alpha : enumerate_Ed(d))
    if (compare(alpha, delta) <= 0) dim += 2 * size_rel_degree(alpha, d) + 1;
  return dim;
}

ScalingTable scaling_report(const std::vector<std::pair<std::int64_t, QGamma>>& grid, unsigned long bits) {
  ScalingTable table;
  bool first = true;
  for (const auto& [d, delta] : grid) {
    ScalingRow row;
    row.d = d;
    row.delta = delta;
    row.dim = dim_Vd(d, delta).dim;
    const RationalInterval x = Rational(static_cast<long>(d)) * delta.enclose(bits);
    const RationalInterval root(sqrt_enclosure(x.lo(), bits).lo(), sqrt_enclosure(x.hi(), bits).hi());
    row.power = x * root;
    row.low_ratio = RationalInterval(Rational(static_cast<long>(row.dim))) / row.power;
    row.high_ratio = RationalInterval(Rational(static_cast<long>(row.dim - 1))) / row.power;
    if (first || row.low_ratio.lo() < table.low_min) table.low_min = row.low_ratio.lo();
    if (first || row.high_ratio.hi() > table.high_max) table.high_max = row.high_ratio.hi();
    first = false;
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::vector<std::pair<std::int64_t, QGamma>> default_grid() {
  std::vector<std::pair<std::int64_t, QGamma>> grid;
  for (long d = 2; d <= 10; ++d)
    for (long q : {8L, 4L, 2L, 1L}) grid.emplace_back(d, QGamma::gamma_times(Integer(d), Integer(q)));
  return grid;
}

}  // namespace zgring
