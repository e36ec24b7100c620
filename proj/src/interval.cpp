#include "zgring/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgring {

RationalInterval::RationalInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("RationalInterval: lo > hi");
}

Rational RationalInterval::mag() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

RationalInterval RationalInterval::outward(unsigned long bits) const {
  Integer scale = 1;
  scale <<= bits;
  Integer lo_num = lo_.get_num() * scale;
  Integer hi_num = hi_.get_num() * scale;
  Integer fl, ce;
  mpz_fdiv_q(fl.get_mpz_t(), lo_num.get_mpz_t(), lo_.get_den_mpz_t());
  mpz_cdiv_q(ce.get_mpz_t(), hi_num.get_mpz_t(), hi_.get_den_mpz_t());
  Rational lo(fl, scale), hi(ce, scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator-(const RationalInterval& a) { return {-a.hi_, -a.lo_}; }

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
  auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

RationalInterval operator*(const Rational& k, const RationalInterval& a) {
  Rational x = k * a.lo_, y = k * a.hi_;
  if (x > y) std::swap(x, y);
  return {x, y};
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (!b.excludes_zero()) throw std::domain_error("interval division by an interval containing 0");
  const Rational one = 1;
  return a * RationalInterval(one / b.hi_, one / b.lo_);
}

std::string RationalInterval::to_string() const {
  return "[" + rational_string(lo_) + ", " + rational_string(hi_) + "]";
}

RationalInterval pow(const RationalInterval& x, long e) {
  if (e < 0) {
    if (!x.excludes_zero()) throw std::domain_error("negative power of an interval containing 0");
    return pow(RationalInterval(Rational(1)) / x, -e);
  }
  if (e == 0) return RationalInterval(Rational(1));
  auto rpow = [](const Rational& q, unsigned long k) {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    return Rational(num, den);  // powers of coprime parts stay coprime
  };
  const auto k = static_cast<unsigned long>(e);
  const Rational pl = rpow(x.lo(), k), ph = rpow(x.hi(), k);
  // monotone unless an even power straddles 0
  if (k % 2 == 0 && x.lo() < 0 && x.hi() > 0) return {Rational(0), std::max(pl, ph)};
  return {std::min(pl, ph), std::max(pl, ph)};
}

RationalInterval sqrt_enclosure(const Rational& x, unsigned long bits) {
  if (x < 0) throw std::domain_error("sqrt_enclosure of a negative number");
  // sqrt(p/q) = sqrt(p q 4^bits) / (q 2^bits)
  Integer radicand = x.get_num() * x.get_den();
  radicand <<= 2 * bits;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  const bool exact = root * root == radicand;
  Integer den = x.get_den();
  den <<= bits;
  Rational lo(root, den), hi(exact ? root : Integer(root + 1), den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

RationalInterval gamma_enclosure(unsigned long bits) {
  const RationalInterval s5 = sqrt_enclosure(Rational(5), bits + 1);
  return Rational(1, 2) * (RationalInterval(Rational(1)) + s5);
}

RationalInterval to_interval(const ZGamma& a, unsigned long bits) {
  // 1/gamma = gamma - 1
  const RationalInterval inv = gamma_enclosure(bits + 4 + mpz_sizeinbase(a.n().get_mpz_t(), 2)) -
                               RationalInterval(Rational(1));
  return RationalInterval(Rational(a.m())) + Rational(a.n()) * inv;
}

std::string rational_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace zgring
