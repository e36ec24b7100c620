#include "zgring/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "zgring/errors.hpp"

namespace zgring {

ZGamma Representation::value() const {
  ZGamma sum;
  for (auto i : indices) sum = sum + gamma_pow_neg(i);
  return sum;
}

std::int64_t Representation::degree() const {
  std::int64_t d = 0;
  for (auto i : indices) d += fib64(i);
  return d;
}

BiDegree Representation::bidegree() const {
  BiDegree d;
  for (auto i : indices) d = d + BiDegree{fib64(i - 2), fib64(i - 1)};
  return d;
}

void check_quad(const Quad& q) {
  if (q.i < 0 || q.a < 1 || q.b < 0 || q.c < 0)
    throw std::invalid_argument("quad requires i, b, c >= 0 and a >= 1");
}

ZGamma Quad::value() const {
  return Integer(a) * gamma_pow_neg(i) + Integer(b) * gamma_pow_neg(i + 1) +
         Integer(c) * gamma_pow_neg(i + 2);
}

BiDegree Quad::bidegree() const {
  return {a * fib64(i - 2) + b * fib64(i - 1) + c * fib64(i),
          a * fib64(i - 1) + b * fib64(i) + c * fib64(i + 1)};
}

std::int64_t Quad::degree() const {
  const BiDegree bd = bidegree();
  return bd.d1 + bd.d2;
}

Representation Quad::expand() const {
  Representation r;
  r.indices.insert(r.indices.end(), static_cast<std::size_t>(a), i);
  r.indices.insert(r.indices.end(), static_cast<std::size_t>(b), i + 1);
  r.indices.insert(r.indices.end(), static_cast<std::size_t>(c), i + 2);
  return r;
}

PartitionClass classify(const ZGamma& alpha) {
  if (sign(alpha) < 0) throw std::domain_error("classify: alpha must be non-negative");
  PartitionClass out;
  if (alpha.is_zero()) return out;
  const Integer& m = alpha.m();
  const Integer& n = alpha.n();
  if (m >= 1 && n >= 1) {
    out.tag = PartitionClass::Tag::Plus;
    out.first = m;
    out.second = n;
    return out;
  }
  const Integer total = abs(m) + abs(n);
  const long limit = 2 * static_cast<long>(mpz_sizeinbase(total.get_mpz_t(), 2)) + 4;
  for (long i = 0; i <= limit; ++i) {
    // columns g^{-i} = (p, q) and g^{-i-2} = (r, t); the determinant is +-1
    const Integer p = fib(-i), q = fib(-i - 1);
    const Integer r = fib(-i - 2), t = fib(-i - 3);
    const Integer det = p * t - r * q;
    const Integer x = (m * t - r * n) * det;  // det^{-1} = det
    const Integer y = (p * n - q * m) * det;
    if (x >= 1 && y >= 0) {
      out.tag = PartitionClass::Tag::Band;
      out.band = i;
      out.first = x;
      out.second = y;
      return out;
    }
  }
  throw bound_exceeded("classify: no band found within the termination bound");
}

std::optional<Quad> canonical_quad(const ZGamma& alpha) {
  const PartitionClass cls = classify(alpha);
  if (cls.tag == PartitionClass::Tag::Zero) return std::nullopt;
  if (!cls.first.fits_slong_p() || !cls.second.fits_slong_p())
    throw bound_exceeded("canonical_quad: coefficients exceed 64 bits");
  if (cls.tag == PartitionClass::Tag::Plus) return Quad{0, cls.first.get_si(), cls.second.get_si(), 0};
  return Quad{cls.band, cls.first.get_si(), 0, cls.second.get_si()};
}

Quad theta_step(const Quad& q) {
  check_quad(q);
  if (q.a >= 2) return {q.i, q.a - 1, q.b + 1, q.c + 1};
  return {q.i + 1, q.b + 1, q.c + 1, 0};
}

std::optional<Quad> psi_step(const Quad& q) {
  check_quad(q);
  if (q.b == 0) return std::nullopt;
  if (q.a >= 2) return Quad{q.i, q.a - 1, q.b - 1, q.c + 1};
  if (q.b >= 2) return Quad{q.i + 1, q.b - 1, q.c + 1, 0};
  return Quad{q.i + 2, q.c + 1, 0, 0};
}

QuadChain::QuadChain(const ZGamma& alpha) {
  auto q = canonical_quad(alpha);
  if (!q) throw std::domain_error("QuadChain: 0 has no quad");
  current_ = *q;
}

const Quad& QuadChain::next() {
  current_ = theta_step(current_);
  return current_;
}

std::vector<Quad> quads_of_alpha(const ZGamma& alpha, std::size_t max_count) {
  std::vector<Quad> out;
  if (max_count == 0) return out;
  QuadChain chain(alpha);
  out.push_back(chain.current());
  while (out.size() < max_count) out.push_back(chain.next());
  return out;
}

std::vector<Quad> quads_of_bidegree(std::int64_t d1, std::int64_t d2) {
  if (d1 < 0 || d2 < 0 || (d1 == 0 && d2 == 0))
    throw std::invalid_argument("quads_of_bidegree: need (d1, d2) != (0, 0), both >= 0");
  std::vector<Quad> out;
  out.push_back(d1 > 0 ? Quad{0, d1, d2, 0} : Quad{1, d2, 0, 0});
  while (auto next = psi_step(out.back())) out.push_back(*next);
  return out;
}

Quad max_quad_for_degree(const ZGamma& alpha, std::int64_t d) {
  if (sign(alpha) < 0 || degree(alpha) > d) throw std::domain_error("alpha is not in E_d");
  QuadChain chain(alpha);
  Quad best = chain.current();
  while (theta_step(best).degree() <= d) best = chain.next();
  return best;
}

Quad max_quad_for_bidegree(const ZGamma& alpha, std::int64_t d1, std::int64_t d2) {
  const BiDegree bound{d1, d2};
  if (sign(alpha) < 0 || !bidegree(alpha).fits_in(bound))
    throw std::domain_error("alpha is not in E_(d1,d2)");
  QuadChain chain(alpha);
  Quad best = chain.current();
  while (theta_step(best).bidegree().fits_in(bound)) best = chain.next();
  return best;
}

std::int64_t size_rel_degree(const ZGamma& alpha, std::int64_t d) {
  if (alpha.is_zero()) return 0;
  return max_quad_for_degree(alpha, d).size();
}

std::int64_t size_rel_bidegree(const ZGamma& alpha, std::int64_t d1, std::int64_t d2) {
  if (alpha.is_zero()) {
    if (d1 < 0 || d2 < 0) throw std::domain_error("alpha is not in E_(d1,d2)");
    return 0;
  }
  return max_quad_for_bidegree(alpha, d1, d2).size();
}

std::vector<ZGamma> enumerate_Ed(std::int64_t d) {
  std::vector<ZGamma> out;
  for (std::int64_t m = -d; m <= d; ++m) {
    const std::int64_t r = d - std::abs(m);
    for (std::int64_t n = -r; n <= r; ++n) {
      ZGamma a(m, n);
      if (sign(a) >= 0) out.push_back(std::move(a));
    }
  }
  return out;
}

std::vector<ZGamma> enumerate_Ebd(std::int64_t d1, std::int64_t d2) {
  std::vector<ZGamma> out;
  for (std::int64_t m = -d1; m <= d1; ++m) {
    for (std::int64_t n = -d2; n <= d2; ++n) {
      ZGamma a(m, n);
      if (sign(a) >= 0) out.push_back(std::move(a));
    }
  }
  return out;
}

std::int64_t chi_total(std::int64_t d, std::int64_t s) {
  if (s < 0 || s > d) return 0;
  return s < d ? 2 * s + 1 : d + 1;
}

std::int64_t chi_bi(std::int64_t d1, std::int64_t d2, std::int64_t s) {
  if (s < 0 || s > d1 + d2) return 0;
  return 2 * std::min({d1, d2, s, d1 + d2 - s}) + 1;
}

std::vector<std::int64_t> chi_total_table(std::int64_t d) {
  std::vector<std::int64_t> t;
  for (std::int64_t s = 0; s <= d; ++s) t.push_back(chi_total(d, s));
  return t;
}

std::vector<std::int64_t> chi_bi_table(std::int64_t d1, std::int64_t d2) {
  std::vector<std::int64_t> t;
  for (std::int64_t s = 0; s <= d1 + d2; ++s) t.push_back(chi_bi(d1, d2, s));
  return t;
}

namespace {
void bump(std::vector<std::int64_t>& hist, std::int64_t s) {
  if (static_cast<std::size_t>(s) >= hist.size()) hist.resize(static_cast<std::size_t>(s) + 1, 0);
  ++hist[static_cast<std::size_t>(s)];
}
}  // namespace

std::vector<std::int64_t> size_histogram_total(std::int64_t d) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& a : enumerate_Ed(d)) bump(hist, size_rel_degree(a, d));
  return hist;
}

std::vector<std::int64_t> size_histogram_bi(std::int64_t d1, std::int64_t d2) {
  std::vector<std::int64_t> hist(static_cast<std::size_t>(d1 + d2) + 1, 0);
  for (const auto& a : enumerate_Ebd(d1, d2)) bump(hist, size_rel_bidegree(a, d1, d2));
  return hist;
}

}  // namespace zgring
