#include <doctest.h>

#include "zgring/errors.hpp"
#include "zgring/sequences.hpp"

using namespace zgring;

namespace {

const Seed& first_seed() {
  static const Seed s = find_seeds(3, 1).at(0);
  return s;
}

}  // namespace

TEST_CASE("matrix helpers") {
  const Mat2 a{2, 1, 1, 1};
  CHECK(a.det() == 1);
  CHECK(a * a.adjugate() == Mat2{1, 0, 0, 1});
  CHECK(a.transpose() == a);
  CHECK(as_triple(a) == SymTriple{2, 1, 1});
  CHECK_FALSE(as_triple(Mat2{1, 2, 3, 4}).has_value());
  CHECK(det3({1, 0, 0}, {0, 1, 0}, {0, 0, 1}) == 1);
  CHECK(det3({1, 2, 3}, {2, 4, 6}, {0, 1, 5}) == 0);

  const TransitionMatrix m{-3, 1, -1, 0};
  CHECK(m.admissible());
  CHECK_FALSE(TransitionMatrix({1, 0, 0, 1}).admissible());  // symmetric
  CHECK_FALSE(TransitionMatrix({0, 1, -1, 0}).admissible()); // skew-symmetric
  CHECK(step_matrix(m, 2) == m);
  CHECK(step_matrix(m, 3) == m.transpose());
  CHECK(step_matrix(m, -1) == m.transpose());
  CHECK(step_matrix(m, -2) == m);
}

TEST_CASE("seed search") {
  const auto seeds = find_seeds(3, 1000);
  REQUIRE(!seeds.empty());
  CHECK(seeds.size() == 32);
  CHECK(find_seeds(3, 5) == std::vector<Seed>(seeds.begin(), seeds.begin() + 5));
  for (const auto& s : seeds) {
    CHECK(s.x1.det() == 1);
    CHECK(s.x2.det() == 1);
    CHECK(s.M.det() == 1);
    CHECK(s.M.admissible());
    CHECK((s.x2.matrix() * s.M.matrix() * s.x1.matrix()).is_symmetric());
  }
  CHECK(seed_matrices(3).size() == 4);
}

TEST_CASE("recurrence") {
  const Seed& s = first_seed();
  const ExtremalSystem sys = generate(s, 22);
  REQUIRE(sys.length() == 22);
  CHECK(sys.x(1) == s.x1);
  CHECK(sys.x(2) == s.x2);
  CHECK(sys.x(3).matrix() == sys.x(2).matrix() * s.M.matrix() * sys.x(1).matrix());
  CHECK(sys.x(4).matrix() == sys.x(3).matrix() * s.M.transpose().matrix() * sys.x(2).matrix());
  CHECK(sys.x(5).matrix() == sys.x(4).matrix() * s.M.matrix() * sys.x(3).matrix());
  for (long k = 1; k <= 22; ++k) CHECK(sys.x(k).det() == 1);
  CHECK_THROWS_AS(sys.x(0), std::out_of_range);
  CHECK_THROWS_AS(sys.x(23), std::out_of_range);
}

TEST_CASE("xi and theta enclosures") {
  const ExtremalSystem sys = generate(first_seed(), 22);
  REQUIRE(sys.xi().has_value());
  REQUIRE(sys.theta().has_value());
  for (std::size_t K = 8; K < 22; ++K) CHECK(xi_enclosure(sys, K).contains(xi_enclosure(sys, K + 1)));
  Rational last(sys.x(22).x1, sys.x(22).x0);
  last.canonicalize();
  CHECK(sys.xi()->contains(last));
  CHECK(sys.theta()->excludes_zero());
  const RationalInterval t = theta_from_xi(first_seed().M, *sys.xi());
  CHECK(t.contains(*sys.theta()));
  CHECK(theta_enclosure(sys).contains(*sys.theta()));
}

TEST_CASE("conditions on a generated window") {
  const ExtremalSystem sys = generate(first_seed(), 22);
  const ConditionReport r = verify_conditions(sys);
  CHECK(r.exact_ok());
  for (const auto& d : r.det2) CHECK(d == 1);
  CHECK(r.det3.size() == 20);
  CHECK(r.det3_constant_abs);
  CHECK(r.det3.front() != 0);
  CHECK(r.e1_tail_deviation < 0.02);
  CHECK(no_growth_trend(r.e2_first));
  CHECK(no_growth_trend(r.e2_second));
  CHECK(r.e2_sup < 10);
}

TEST_CASE("corrupted window is rejected") {
  const ExtremalSystem good = generate(first_seed(), 12);
  std::vector<SymTriple> w = good.window();
  w[6].x1 += 1;
  const ConditionReport r = verify_conditions(ExtremalSystem(first_seed(), w));
  CHECK_FALSE(r.exact_ok());
  CHECK(r.failures.front().find("x_7") != std::string::npos);
}

TEST_CASE("growth trend") {
  std::vector<ExponentSample> flat, growing;
  for (long k = 0; k < 8; ++k) {
    flat.push_back({k, 1.0 + 0.1 * (k % 2)});
    growing.push_back({k, static_cast<double>(1L << k)});
  }
  CHECK(no_growth_trend(flat));
  CHECK_FALSE(no_growth_trend(growing));
  CHECK_THROWS_AS(no_growth_trend(std::vector<ExponentSample>(3)), std::invalid_argument);
}

TEST_CASE("germs") {
  const ExtremalSystem sys = generate(first_seed(), 22);
  const auto w = germ_window(sys, 0, 0, 3, 6);
  CHECK(w == std::vector<Integer>{sys.x(6).x0, sys.x(8).x0, sys.x(10).x0, sys.x(12).x0});
  CHECK(last_germ_index(sys, 0) == 11);
  CHECK(last_germ_index(sys, -1) == 11);
  CHECK(last_germ_index(sys, 2) == 10);

  // X1/X0 and X2/X0 approach xi and xi^2
  const auto x0 = germ_window(sys, 0, 0, 11, 11), x1 = germ_window(sys, 0, 1, 11, 11), x2 = germ_window(sys, 0, 2, 11, 11);
  const auto r1 = ratio_check(x1, x0), r2 = ratio_check(x2, x0);
  const RationalInterval xi = *sys.xi();
  CHECK(within_of_one(RationalInterval(r1.front()) / xi, Rational(1, 1000000)));
  CHECK(within_of_one(RationalInterval(r2.front()) / (xi * xi), Rational(1, 1000000)));

  const std::vector<Integer> zero{0};
  CHECK_THROWS_AS(ratio_check(x0, zero), std::domain_error);
  CHECK(within_of_one(x0_growth_ratio(sys, 2, 10), Rational(1, 1000000)));
}

TEST_CASE("systems without stored enclosures") {
  const ExtremalSystem sys(first_seed(), generate(first_seed(), 10).window());
  CHECK_FALSE(sys.xi().has_value());
  CHECK(theta_enclosure(sys).excludes_zero());
  const ExtremalSystem tiny(first_seed(), generate(first_seed(), 4).window());
  CHECK_THROWS(xi_enclosure(tiny));
}
