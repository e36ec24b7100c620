// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "zgring/combinatorics.hpp"
#include "zgring/dimension.hpp"
#include "zgring/errors.hpp"
#include "zgring/oracle.hpp"
#include "zgring/ring.hpp"
#include "zgring/sequences.hpp"

using namespace zgring;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << "first failure: " << why << "; ";
    pass = false;
  }
  void require(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string str(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
  return s + "]";
}

// floor(log2 |q|) for q != 0, valid far outside the double range
long log2_floor(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) - static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

bool strictly_below(const BiDegree& a, const BiDegree& b) { return a.fits_in(b) && !(a == b); }

// 1. chi_d against the exhaustive histogram, d <= 8.
void chi_total_vs_oracle(Outcome& o) {
  const auto t0 = Clock::now();
  for (std::int64_t d = 0; d <= 8; ++d) {
    const auto closed = chi_total_table(d);
    const auto oracle = oracle_histogram(oracle_sizes_total(d));
    o.require(closed == oracle, "d=" + std::to_string(d) + " closed " + str(closed) + " oracle " + str(oracle));
    for (std::int64_t s = 0; s <= d; ++s) {
      const std::int64_t expect = s == d ? d + 1 : 2 * s + 1;
      o.require(chi_total(d, s) == expect, "chi_" + std::to_string(d) + "(" + std::to_string(s) + ")");
    }
  }
  const double t = seconds_since(t0);
  o.require(t < 30, "runtime " + std::to_string(t) + " s");
  o.note << "d=0..8, " << t << " s";
}

// 2. chi_(d1,d2) against the oracle, d1 + d2 <= 10, with both symmetries.
void chi_bi_vs_oracle(Outcome& o) {
  const auto t0 = Clock::now();
  int pairs = 0;
  for (std::int64_t d1 = 0; d1 <= 10; ++d1)
    for (std::int64_t d2 = 0; d1 + d2 <= 10; ++d2, ++pairs) {
      const std::string tag = "(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      const auto closed = chi_bi_table(d1, d2);
      const auto oracle = oracle_histogram(oracle_sizes_bi(d1, d2));
      o.require(closed == oracle, tag + " closed " + str(closed) + " oracle " + str(oracle));
      for (std::int64_t s = 0; s <= d1 + d2; ++s) {
        const std::int64_t expect = 2 * std::min({d1, d2, s, d1 + d2 - s}) + 1;
        o.require(chi_bi(d1, d2, s) == expect, tag + " formula at s=" + std::to_string(s));
        o.require(chi_bi(d1, d2, s) == chi_bi(d2, d1, s), tag + " swap symmetry");
        o.require(chi_bi(d1, d2, s) == chi_bi(d1, d2, d1 + d2 - s), tag + " s -> d1+d2-s symmetry");
      }
    }
  const double t = seconds_since(t0);
  o.require(t < 60, "runtime " + std::to_string(t) + " s");
  o.note << pairs << " bi-degrees, " << t << " s";
}

// 3. |E_d| and |E_(d1,d2)| by enumeration.
void cardinalities(Outcome& o) {
  for (std::int64_t d = 0; d <= 30; ++d)
    o.require(static_cast<std::int64_t>(enumerate_Ed(d).size()) == d * d + d + 1, "|E_" + std::to_string(d) + "|");
  for (std::int64_t d1 = 0; d1 <= 20; ++d1)
    for (std::int64_t d2 = 0; d2 <= 20; ++d2)
      o.require(static_cast<std::int64_t>(enumerate_Ebd(d1, d2).size()) == 2 * d1 * d2 + d1 + d2 + 1,
                "|E_(" + std::to_string(d1) + "," + std::to_string(d2) + ")|");
  o.note << "d<=30, (d1,d2)<=(20,20)";
}

// 4. Q_alpha prefixes over E_8 and Q_d endpoints for d <= (5,5).
void quad_structure(Outcome& o) {
  int alphas = 0;
  for (const ZGamma& a : enumerate_Ed(8)) {
    if (a.is_zero()) continue;
    ++alphas;
    const auto q = quads_of_alpha(a, 6);
    const std::string tag = "alpha=" + a.to_string();
    o.require(q.size() == 6, tag + " prefix length");
    for (std::size_t t = 0; t < q.size(); ++t) {
      o.require(q[t].value() == a, tag + " value");
      if (t == 0) continue;
      o.require(q[t].size() == q[t - 1].size() + 1, tag + " consecutive sizes");
      o.require(q[t].degree() > q[t - 1].degree(), tag + " degree increase");
      o.require(strictly_below(q[t - 1].bidegree(), q[t].bidegree()), tag + " bi-degree increase");
    }
  }
  int bidegrees = 0;
  for (std::int64_t d1 = 0; d1 <= 5; ++d1)
    for (std::int64_t d2 = 0; d2 <= 5; ++d2) {
      if (d1 + d2 == 0) continue;
      ++bidegrees;
      const std::string tag = "Q_(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
      const auto q = quads_of_bidegree(d1, d2);
      if (q.empty()) {
        o.fail(tag + " empty");
        continue;
      }
      const ZGamma top(d1, d2);
      const ZGamma bottom = sign(ZGamma(d1, -d2)) >= 0 ? ZGamma(d1, -d2) : ZGamma(-d1, d2);
      o.require(q.front().value() == top, tag + " first endpoint");
      o.require(q.back().value() == bottom, tag + " last endpoint");
      o.require(q.front().size() == d1 + d2, tag + " first size");
      for (std::size_t t = 0; t < q.size(); ++t) {
        o.require(q[t].bidegree() == BiDegree{d1, d2}, tag + " bi-degree");
        if (t) o.require(q[t].size() == q[t - 1].size() - 1, tag + " size steps");
      }
    }
  o.note << alphas << " alphas, " << bidegrees << " bi-degrees";
}

// 5. Hilbert functions of I1 and I2 for every distinct seed matrix, with a mod-p rank cross-check.
void hilbert_functions(Outcome& o) {
  const auto t0 = Clock::now();
  const auto mats = seed_matrices(3);
  o.require(mats.size() >= 3, "only " + std::to_string(mats.size()) + " seed matrices");
  for (const auto& m : mats) {
    for (std::int64_t d = 0; d <= 5; ++d) {
      const auto h = hilbert_I1(d, m);
      o.require(h.match(), m.to_string() + " I1 d=" + std::to_string(d));
      o.require(h.expected == hilbert_I1_closed(d) && hilbert_I1_closed(d) * 3 == 4 * d * d * d + 6 * d * d + 8 * d + 3,
                "I1 closed form");
      o.require(ideal_rank_mod_p_I1(d, m) == h.ideal_rank, m.to_string() + " I1 mod-p rank d=" + std::to_string(d));
    }
    for (std::int64_t d1 = 0; d1 <= 4; ++d1)
      for (std::int64_t d2 = 0; d2 <= 4; ++d2) {
        const auto h = hilbert_I2(d1, d2, m);
        const std::string tag = m.to_string() + " I2 (" + std::to_string(d1) + "," + std::to_string(d2) + ")";
        o.require(h.match(), tag);
        o.require(h.expected == (d1 + 1) * (d1 + 1) * (d2 + 1) * (d2 + 1) - d1 * d1 * d2 * d2, tag + " closed form");
        o.require(ideal_rank_mod_p_I2(d1, d2, m) == h.ideal_rank, tag + " mod-p rank");
      }
  }
  const double t = seconds_since(t0);
  o.require(t < 300, "runtime " + std::to_string(t) + " s");
  o.note << mats.size() << " matrices, " << t << " s";
}

// 6. The monomial family is a basis of the homogeneous quotient.
void basis_rank(Outcome& o) {
  const auto m = seed_matrices(3).front();
  // (2,1): (d1+1)^2 (d2+1)^2 - d1^2 d2^2 = 36 - 4 = 32
  const std::vector<std::pair<DegreeBound, std::int64_t>> cases = {
      {DegreeBound::total(1), 7},   {DegreeBound::total(2), 25},  {DegreeBound::total(3), 63},
      {DegreeBound::bi(1, 1), 15},  {DegreeBound::bi(2, 1), 32},  {DegreeBound::bi(2, 2), 65}};
  for (const auto& [b, target] : cases) {
    const BasisReport r = basis_rank_check(b, m);
    const std::string tag = b.to_string() + ": cardinality " + std::to_string(r.cardinality) + ", rank " +
                            std::to_string(r.family_rank) + ", closed form " + r.expected.get_str();
    o.note << b.to_string() << " " << r.cardinality << "/" << r.family_rank << "; ";
    o.require(r.full(), tag + " not full");
    o.require(r.family_rank == target, tag + " vs target " + std::to_string(target));
  }
}

// 7. Generators of I and random combinations reduce to zero; germ evaluation agrees.
void kernel(Outcome& o) {
  const auto m = seed_matrices(3).front();
  const auto seeds = find_seeds(3, 64);
  std::optional<ExtremalSystem> sys;
  for (const auto& s : seeds)
    if (s.M == m) {
      sys = generate(s, kDefaultWindow);
      break;
    }
  const Ideal I = ideal(IdealKind::I, m);
  const QuotientBasis basis(DegreeBound::total(3), m);
  auto is_zero = [](const std::vector<Rational>& c) {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  };
  for (std::size_t g = 0; g < I.generators.size(); ++g) {
    o.require(is_zero(basis.reduce(I.generators[g])), "generator " + std::to_string(g));
    for (long k = 2; k <= last_germ_index(*sys, 0); ++k)
      o.require(evaluate_at_germ(I.generators[g], *sys, k) == 0, "generator " + std::to_string(g) + " at germ");
  }

  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<int> coef(-9, 9);
  const std::vector<Var> vars = {X0, X1, X2, Y0, Y1, Y2};
  auto random_linear = [&] {
    MPoly p = MPoly(Integer(coef(rng)));
    for (Var v : vars) p += Integer(coef(rng)) * MPoly::var(v);
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    const MPoly p = I.generators[0] * random_linear() + I.generators[1] * random_linear() + I.generators[2] * random_linear();
    o.require(p.total_degree() <= 3, "combination degree");
    o.require(is_zero(basis.reduce(p)), "combination " + std::to_string(t));
    o.require(evaluate_at_germ(p, *sys, last_germ_index(*sys, 0)) == 0, "combination at germ");
  }
  // a non-member must not reduce to zero
  o.require(!is_zero(basis.reduce(MPoly::var(X0) * MPoly::var(Y0))), "X0 X0* reduced to zero");
  o.note << "3 generators + 50 combinations, M=" << m.to_string();
}

// 8. Finite-window verification of every seed.
void sequences(Outcome& o) {
  const auto seeds = find_seeds(3, 1000);
  o.require(!seeds.empty(), "no seeds");
  const Rational tol(1, 1000000);
  double worst_e1 = 0, worst_time = 0;
  std::string worst_ratio;
  Rational worst_dev = 0;
  for (std::size_t t = 0; t < seeds.size(); ++t) {
    const std::string tag = "seed " + std::to_string(t);
    const auto t0 = Clock::now();
    try {
      const ExtremalSystem sys = generate(seeds[t], kDefaultWindow);
      const ConditionReport r = verify_conditions(sys);
      o.require(r.exact_ok(), tag + " exact: " + (r.failures.empty() ? "" : r.failures.front()));
      for (const auto& d : r.det2) o.require(d == 1, tag + " det");
      for (const auto& x : sys.window()) o.require(x.matrix().is_symmetric(), tag + " symmetry");
      for (const auto& d : r.det3) o.require(d != 0, tag + " det3 zero");
      o.require(r.det3_constant_abs, tag + " |det3| not constant");
      o.require(r.e1_tail_deviation <= 0.02, tag + " E1 deviation " + std::to_string(r.e1_tail_deviation));
      o.require(no_growth_trend(r.e2_first) && no_growth_trend(r.e2_second), tag + " E2 growth");
      // x_(2k+2,0) / (theta x_(2k+1,0) x_(2k,0)) at the last index of the window
      const long k = (static_cast<long>(sys.length()) - 2) / 2;
      const RationalInterval theta = *sys.theta();
      const Rational den = Rational(sys.x(2 * k + 1).x0 * sys.x(2 * k).x0);
      const RationalInterval ratio = RationalInterval(Rational(sys.x(2 * k + 2).x0)) / (den * theta);
      o.require(within_of_one(ratio, tol), tag + " growth ratio " + ratio.to_string());
      const Rational dev = std::max(abs(ratio.lo() - 1), abs(ratio.hi() - 1));
      if (dev > worst_dev) worst_dev = dev;
      o.require(within_of_one(x0_growth_ratio(sys, 2, k), tol), tag + " combined growth ratio");
      worst_e1 = std::max(worst_e1, r.e1_tail_deviation);
    } catch (const std::exception& e) {
      o.fail(tag + " threw: " + e.what());
    }
    const double dt = seconds_since(t0);
    worst_time = std::max(worst_time, dt);
    o.require(dt < 30, tag + " runtime " + std::to_string(dt));
  }
  o.note << seeds.size() << " seeds, K=" << kDefaultWindow << ", max E1 deviation " << worst_e1
         << ", max |ratio-1| ~ 2^" << log2_floor(worst_dev) << ", max "
         << worst_time << " s per seed";
}

// 9. Germ asymptotics of the monomial family at the end of the window.
void monomial_asymptotics(Outcome& o) {
  const auto seeds = find_seeds(3, 1000);
  const Rational tol(1, 1000);
  std::size_t checked = 0;
  Rational worst = 0;
  // the family depends only on M
  std::vector<std::pair<TransitionMatrix, std::vector<MonomialElement>>> families;
  for (const auto& m : seed_matrices(3)) {
    CoordinatePolys coords(m);
    std::vector<MonomialElement> all;
    for (std::int64_t d = 1; d <= 3; ++d)
      for (auto& e : monomial_family(DegreeBound::total(d), coords)) all.push_back(std::move(e));
    families.emplace_back(m, std::move(all));
  }
  for (std::size_t t = 0; t < seeds.size(); ++t) {
    const ExtremalSystem sys = generate(seeds[t], kDefaultWindow);
    const long k = last_germ_index(sys, 0);
    const auto fam = std::find_if(families.begin(), families.end(), [&](const auto& f) { return f.first == seeds[t].M; });
    if (fam == families.end()) {
      o.fail("seed " + std::to_string(t) + " matrix not among the seed matrices");
      continue;
    }
    for (const MonomialElement& e : fam->second) {
      std::vector<Rational> A(static_cast<std::size_t>(e.j + 1), Rational(0));
      A.back() = 1;
      const std::string tag = "seed " + std::to_string(t) + " d=" + std::to_string(e.bound.d) + " alpha=" +
                              e.alpha.to_string() + " j=" + std::to_string(e.j);
      try {
        const RationalInterval r = asymptotic_ratio(evaluate_at_germ(e.poly, sys, k), sys, k, e.alpha, e.size, A);
        o.require(within_of_one(r, tol), tag + " ratio " + std::to_string(r.mid().get_d()));
        worst = std::max({worst, Rational(abs(r.lo() - 1)), Rational(abs(r.hi() - 1))});
      } catch (const std::exception& ex) {
        o.fail(tag + " threw: " + ex.what());
      }
      ++checked;
    }
  }
  o.note << checked << " elements over " << seeds.size() << " seeds at germ index 11, max |ratio-1| ~ 2^"
         << log2_floor(worst);
}

// 10. Two paths to dim V_d(delta), the scaling band and saturation.
void dimension(Outcome& o) {
  int compared = 0;
  for (std::int64_t d = 1; d <= 8; ++d) {
    std::vector<QGamma> deltas;
    for (int k = 1; k <= 19; ++k) deltas.push_back(QGamma::rational(k * d, 12));
    deltas.push_back(QGamma::gamma_times(d, 1));
    for (const auto& delta : deltas) {
      ++compared;
      const auto via_quads = dim_Vd(d, delta).dim;
      const auto direct = dim_Vd_direct(d, delta);
      o.require(via_quads == direct, "d=" + std::to_string(d) + " delta=" + delta.to_string() + ": " +
                                         std::to_string(via_quads) + " vs " + std::to_string(direct));
    }
  }
  const ScalingTable table = scaling_report(default_grid());
  o.require(table.low_min >= kRatioBandLow, "low ratio " + std::to_string(table.low_min.get_d()));
  o.require(table.high_max <= kRatioBandHigh, "high ratio " + std::to_string(table.high_max.get_d()));
  for (std::int64_t d = 1; d <= 10; ++d) {
    const Integer closed = hilbert_I1_closed(d);
    // max E_d = d, so both d and gamma d saturate
    bool bounded = true;
    for (const auto& a : enumerate_Ed(d)) bounded = bounded && compare_rational(a, d, 1) <= 0;
    o.require(bounded, "max E_" + std::to_string(d) + " above d");
    for (const auto& delta : {QGamma::rational(d, 1), QGamma::gamma_times(d, 1)})
      o.require(Integer(dim_Vd(d, delta).dim) == closed, "saturation d=" + std::to_string(d));
  }
  o.note << compared << " (d, delta) pairs; grid ratios in [" << table.low_min.get_d() << ", "
         << table.high_max.get_d() << "] within band [" << kRatioBandLow.get_d() << ", " << kRatioBandHigh.get_d()
         << "]";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"chi total degree vs oracle", chi_total_vs_oracle},
      {"chi bi-degree vs oracle", chi_bi_vs_oracle},
      {"cardinalities of E_d", cardinalities},
      {"quad structure", quad_structure},
      {"Hilbert functions", hilbert_functions},
      {"basis of the quotient", basis_rank},
      {"kernel of reduction", kernel},
      {"sequence verification", sequences},
      {"monomial asymptotics", monomial_asymptotics},
      {"dimension estimate", dimension},
  };
  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      criteria[c].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s  %2zu  %-28s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c + 1, criteria[c].first.c_str(),
                seconds_since(t0), o.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
