#include "zgring/zgamma.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "zgring/errors.hpp"

namespace zgring {

namespace {

// Two-sided table: nonneg_[i] = f(i), neg_[i] = f(-i). Guarded by a mutex;
// entries are never modified once written.
class FibTable {
 public:
  FibTable() : nonneg_{1, 1}, neg_{1, 0} {}

  Integer get(long i) {
    std::lock_guard lock(mutex_);
    if (i >= 0) {
      auto k = static_cast<std::size_t>(i);
      while (nonneg_.size() <= k) {
        const std::size_t s = nonneg_.size();
        nonneg_.push_back(nonneg_[s - 1] + nonneg_[s - 2]);
      }
      return nonneg_[k];
    }
    auto k = static_cast<std::size_t>(-i);
    // f(-k) = f(-k+2) - f(-k+1)
    while (neg_.size() <= k) {
      const std::size_t s = neg_.size();
      neg_.push_back(neg_[s - 2] - neg_[s - 1]);
    }
    return neg_[k];
  }

 private:
  std::mutex mutex_;
  std::vector<Integer> nonneg_;
  std::vector<Integer> neg_;
};

FibTable& fib_table() {
  static FibTable table;
  return table;
}

}  // namespace

Integer fib(long i) { return fib_table().get(i); }

std::int64_t fib64(long i) {
  if (i > 90 || i < -90) throw bound_exceeded("fib64: |i| > 90 overflows 64 bits");
  static const auto table = [] {
    std::vector<std::int64_t> t(181);
    for (long k = -90; k <= 90; ++k) t[static_cast<std::size_t>(k + 90)] = fib(k).get_si();
    return t;
  }();
  return table[static_cast<std::size_t>(i + 90)];
}

int sign_sqrt5(const Integer& u, const Integer& v) {
  const int su = sgn(u);
  const int sv = sgn(v);
  if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
  if (su <= 0 && sv <= 0) return -1;
  // mixed signs: compare u^2 with 5 v^2; equality is impossible for v != 0
  const Integer lhs = u * u;
  const Integer rhs = 5 * v * v;
  const int dominant = cmp(lhs, rhs) > 0 ? su : sv;
  return dominant;
}

// m + n/g = ((2m - n) + n sqrt5) / 2
int sign(const ZGamma& a) { return sign_sqrt5(2 * a.m() - a.n(), a.n()); }

std::strong_ordering compare(const ZGamma& a, const ZGamma& b) {
  const int s = sign(a - b);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const ZGamma& a, const ZGamma& b) { return compare(a, b); }

std::strong_ordering compare_rational(const ZGamma& a, const Integer& p, const Integer& q) {
  if (q <= 0) throw std::invalid_argument("compare_rational: denominator must be positive");
  return compare(ZGamma(q * a.m() - p, q * a.n()), ZGamma());
}

ZGamma gamma_pow_neg(long i) {
  if (i < 0) throw std::invalid_argument("gamma_pow_neg: exponent must be non-negative");
  return {fib(-i), fib(-i - 1)};
}

std::int64_t degree(const ZGamma& a) {
  const Integer d = abs(a.m()) + abs(a.n());
  if (!d.fits_slong_p()) throw bound_exceeded("degree does not fit 64 bits");
  return d.get_si();
}

BiDegree bidegree(const ZGamma& a) {
  const Integer d1 = abs(a.m());
  const Integer d2 = abs(a.n());
  if (!d1.fits_slong_p() || !d2.fits_slong_p()) throw bound_exceeded("bidegree does not fit 64 bits");
  return {d1.get_si(), d2.get_si()};
}

double ZGamma::approx() const {
  static const double inv_gamma = 2.0 / (1.0 + std::sqrt(5.0));
  return m_.get_d() + n_.get_d() * inv_gamma;
}

std::string ZGamma::to_string() const {
  std::string s = m_.get_str();
  if (n_ >= 0) s += "+";
  s += n_.get_str() + "/g";
  return s;
}

}  // namespace zgring
