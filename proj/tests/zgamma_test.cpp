#include <doctest.h>
#include <mpfr.h>

#include <random>

#include "zgring/zgamma.hpp"

using namespace zgring;

namespace {

// sign of m + n/gamma evaluated in 256-bit floating point
int mpfr_sign(const Integer& m, const Integer& n) {
  mpfr_t g, x, t;
  mpfr_inits2(256, g, x, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(g, 5, MPFR_RNDN);
  mpfr_add_ui(g, g, 1, MPFR_RNDN);
  mpfr_div_ui(g, g, 2, MPFR_RNDN);
  mpfr_set_z(t, n.get_mpz_t(), MPFR_RNDN);
  mpfr_div(t, t, g, MPFR_RNDN);
  mpfr_set_z(x, m.get_mpz_t(), MPFR_RNDN);
  mpfr_add(x, x, t, MPFR_RNDN);
  const int s = mpfr_sgn(x);
  mpfr_clears(g, x, t, static_cast<mpfr_ptr>(nullptr));
  return s;
}

}  // namespace

TEST_CASE("two-sided Fibonacci") {
  CHECK(fib(0) == 1);
  CHECK(fib(1) == 1);
  CHECK(fib(4) == 5);
  CHECK(fib(-1) == 0);
  CHECK(fib(-2) == 1);
  CHECK(fib(-3) == -1);
  CHECK(fib(-4) == 2);
  for (long i = -40; i <= 40; ++i) CHECK(fib(i + 2) == fib(i + 1) + fib(i));
  CHECK(fib64(90) == fib(90).get_si());
  CHECK(fib(200) == fib(199) + fib(198));
}

TEST_CASE("negative powers of gamma") {
  CHECK(gamma_pow_neg(0) == ZGamma(1, 0));
  CHECK(gamma_pow_neg(1) == ZGamma(0, 1));
  CHECK(gamma_pow_neg(3) == ZGamma(-1, 2));
  CHECK(gamma_pow_neg(3).approx() == doctest::Approx(0.2360679775));
  for (long i = 0; i <= 20; ++i) CHECK(gamma_pow_neg(i) * gamma_pow_neg(1) == gamma_pow_neg(i + 1));
  CHECK_THROWS_AS(gamma_pow_neg(-1), std::invalid_argument);
}

TEST_CASE("exact sign") {
  CHECK(sign(ZGamma(0, 0)) == 0);
  CHECK(sign(ZGamma(1, -1)) == 1);
  CHECK(sign(ZGamma(-2, 3)) == -1);
  CHECK(sign_sqrt5(0, 0) == 0);
  CHECK(sign_sqrt5(-2, 1) == 1);
  CHECK(sign_sqrt5(-3, 1) == -1);

  SUBCASE("near-cancelling Fibonacci pairs against MPFR") {
    // f(k-1) - f(k)/gamma = (-1/gamma)^k up to a constant; the sign alternates
    for (long k = 2; k <= 150; ++k) {
      const ZGamma a(fib(k - 1), -fib(k));
      CHECK(sign(a) == mpfr_sign(a.m(), a.n()));
      CHECK(sign(a) != 0);
    }
  }
  SUBCASE("random large coordinates against MPFR") {
    std::mt19937_64 rng(7);
    gmp_randclass r(gmp_randinit_default);
    r.seed(11);
    for (int t = 0; t < 500; ++t) {
      Integer m = r.get_z_bits(60) - (Integer(1) << 59);
      Integer n = r.get_z_bits(60) - (Integer(1) << 59);
      CHECK(sign(ZGamma(m, n)) == mpfr_sign(m, n));
    }
  }
}

TEST_CASE("order") {
  CHECK(compare(ZGamma(1, 0), ZGamma(0, 2)) == std::strong_ordering::less);
  CHECK(compare(ZGamma(3, 5), ZGamma(3, 5)) == std::strong_ordering::equal);
  CHECK(compare_rational(ZGamma(1, 1), 8, 5) == std::strong_ordering::greater);
  CHECK(compare_rational(ZGamma(1, 1), 13, 8) == std::strong_ordering::less);
  CHECK(ZGamma(0, 1) < ZGamma(1, 0));
  CHECK(ZGamma(-2, 3) < ZGamma(0, 0));
  CHECK(ZGamma(0, 0) < ZGamma(2, -3));
}

TEST_CASE("ring operations") {
  const ZGamma g_inv(0, 1);
  CHECK(g_inv * g_inv == ZGamma(1, -1));  // 1/g^2 = 1 - 1/g
  const ZGamma a(2, 3), b(-1, 4);
  CHECK(a * b == b * a);
  CHECK((a + b) * a == a * a + b * a);
  CHECK(a - a == ZGamma());
  CHECK((a * b).approx() == doctest::Approx(a.approx() * b.approx()));
}

TEST_CASE("degree and bi-degree") {
  CHECK(degree(ZGamma(0, 0)) == 0);
  CHECK(degree(ZGamma(2, 3)) == 5);
  CHECK(bidegree(ZGamma(2, 3)) == BiDegree{2, 3});
  CHECK(degree(ZGamma(-1, 2)) == 3);
  CHECK(bidegree(ZGamma(-1, 2)) == BiDegree{1, 2});
  CHECK(BiDegree{1, 2}.fits_in({1, 3}));
  CHECK_FALSE(BiDegree{2, 0}.fits_in({1, 3}));
}
