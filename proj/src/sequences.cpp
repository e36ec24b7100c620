#include "zgring/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zgring/errors.hpp"

namespace zgring {

Mat2 operator*(const Mat2& a, const Mat2& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
          a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
}

const Integer& SymTriple::operator[](int j) const {
  switch (j) {
    case 0: return x0;
    case 1: return x1;
    case 2: return x2;
    default: throw std::out_of_range("SymTriple coordinate must be 0, 1 or 2");
  }
}

std::optional<SymTriple> as_triple(const Mat2& m) {
  if (!m.is_symmetric()) return std::nullopt;
  return SymTriple{m.a11, m.a12, m.a22};
}

Integer det3(const SymTriple& x, const SymTriple& y, const SymTriple& z) {
  return x.x0 * (y.x1 * z.x2 - y.x2 * z.x1) - x.x1 * (y.x0 * z.x2 - y.x2 * z.x0) +
         x.x2 * (y.x0 * z.x1 - y.x1 * z.x0);
}

std::string TransitionMatrix::to_string() const {
  return "[[" + std::to_string(a11) + ", " + std::to_string(a12) + "], [" + std::to_string(a21) +
         ", " + std::to_string(a22) + "]]";
}

TransitionMatrix step_matrix(const TransitionMatrix& m, long j) {
  return (j % 2 == 0) ? m : m.transpose();
}

namespace {

std::vector<SymTriple> unimodular_triples(int bound) {
  std::vector<SymTriple> out;
  for (int x0 = -bound; x0 <= bound; ++x0)
    for (int x1 = -bound; x1 <= bound; ++x1)
      for (int x2 = -bound; x2 <= bound; ++x2)
        if (x0 * x2 - x1 * x1 == 1) out.push_back({x0, x1, x2});
  return out;
}

std::vector<TransitionMatrix> admissible_matrices(int bound) {
  std::vector<TransitionMatrix> out;
  for (int a = -bound; a <= bound; ++a)
    for (int b = -bound; b <= bound; ++b)
      for (int c = -bound; c <= bound; ++c)
        for (int d = -bound; d <= bound; ++d) {
          TransitionMatrix m{a, b, c, d};
          if (m.admissible()) out.push_back(m);
        }
  return out;
}

// x_{j+1} from x_j and x_{j-1}; empty when the product is not symmetric.
std::optional<SymTriple> step(const SymTriple& cur, const SymTriple& prev, const TransitionMatrix& m, long j) {
  return as_triple(cur.matrix() * step_matrix(m, j).matrix() * prev.matrix());
}

bool grows_through(const Seed& seed, long last) {
  SymTriple prev = seed.x1, cur = seed.x2;
  if (prev.x0 == 0 || abs(cur.x0) <= abs(prev.x0)) return false;
  for (long j = 2; j < last; ++j) {
    auto next = step(cur, prev, seed.M, j);
    if (!next || next->x0 == 0 || abs(next->x0) <= abs(cur.x0)) return false;
    prev = std::move(cur);
    cur = std::move(*next);
  }
  return true;
}

double log_abs(const Integer& z) {
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(d)) + static_cast<double>(exp) * std::log(2.0);
}

Rational ratio_at(const ExtremalSystem& sys, std::size_t k) {
  Rational r(sys.x(static_cast<long>(k)).x1, sys.x(static_cast<long>(k)).x0);
  r.canonicalize();
  return r;
}

RationalInterval enclosure_at(const ExtremalSystem& sys, std::size_t k) {
  const Rational rk = ratio_at(sys, k);
  const Rational radius = 4 * abs(rk - ratio_at(sys, k - 1));
  return {rk - radius, rk + radius};
}

}  // namespace

std::vector<Seed> find_seeds(int bound, std::size_t count) {
  if (bound < 1) throw std::invalid_argument("find_seeds: bound must be >= 1");
  std::vector<Seed> out;
  if (count == 0) return out;
  const auto triples = unimodular_triples(bound);
  const auto matrices = admissible_matrices(bound);
  for (const auto& x1 : triples)
    for (const auto& x2 : triples)
      for (const auto& m : matrices) {
        if (!step(x2, x1, m, 2)) continue;
        Seed seed{x1, x2, m};
        if (!grows_through(seed, 8)) continue;
        out.push_back(std::move(seed));
        if (out.size() == count) return out;
      }
  return out;
}

std::vector<TransitionMatrix> seed_matrices(int bound) {
  std::vector<TransitionMatrix> out;
  for (const auto& s : find_seeds(bound, static_cast<std::size_t>(-1))) {
    bool seen = false;
    for (const auto& m : out) seen = seen || m == s.M;
    if (!seen) out.push_back(s.M);
  }
  return out;
}

ExtremalSystem::ExtremalSystem(Seed seed, std::vector<SymTriple> window)
    : seed_(std::move(seed)), window_(std::move(window)) {}

const SymTriple& ExtremalSystem::x(long k) const {
  if (k < 1 || static_cast<std::size_t>(k) > window_.size())
    throw std::out_of_range("index " + std::to_string(k) + " outside the window 1.." +
                            std::to_string(window_.size()));
  return window_[static_cast<std::size_t>(k - 1)];
}

void ExtremalSystem::set_enclosures(RationalInterval xi, RationalInterval theta) {
  xi_ = std::move(xi);
  theta_ = std::move(theta);
}

ExtremalSystem generate(const Seed& seed, std::size_t K) {
  if (K < 3) throw std::invalid_argument("generate: window length must be >= 3");
  if (seed.x1.det() != 1 || seed.x2.det() != 1)
    throw std::invalid_argument("generate: seed triples must have determinant 1");
  if (!seed.M.admissible())
    throw std::invalid_argument("generate: transition matrix must have det 1 and be neither symmetric nor skew");
  std::vector<SymTriple> window{seed.x1, seed.x2};
  window.reserve(K);
  for (std::size_t k = 3; k <= K; ++k) {
    const long j = static_cast<long>(k) - 1;
    auto next = step(window[k - 2], window[k - 3], seed.M, j);
    if (!next) throw verification_error("generate: x_" + std::to_string(k) + " is not symmetric");
    window.push_back(std::move(*next));
  }
  ExtremalSystem sys(seed, std::move(window));
  if (K >= 6) {
    try {
      RationalInterval xi = xi_enclosure(sys);
      RationalInterval theta = theta_from_xi(seed.M, xi);
      sys.set_enclosures(std::move(xi), std::move(theta));
    } catch (const verification_error&) {
      // left uncertified; xi_enclosure() reports the failure to callers that need it
    }
  }
  return sys;
}

RationalInterval xi_enclosure(const ExtremalSystem& sys) { return xi_enclosure(sys, sys.length()); }

RationalInterval xi_enclosure(const ExtremalSystem& sys, std::size_t K) {
  if (K < 6 || K > sys.length()) throw std::invalid_argument("xi_enclosure: need 6 <= K <= window length");
  for (std::size_t k = K - 3; k <= K; ++k)
    if (sys.x(static_cast<long>(k)).x0 == 0) throw verification_error("xi_enclosure: zero first coordinate");
  const RationalInterval e2 = enclosure_at(sys, K - 2);
  const RationalInterval e1 = enclosure_at(sys, K - 1);
  const RationalInterval e0 = enclosure_at(sys, K);
  bool ok = e0.width() > 0 && e2.contains(e1) && e1.contains(e0);
  ok = ok && e2.contains(ratio_at(sys, K - 1)) && e2.contains(ratio_at(sys, K)) &&
       e1.contains(ratio_at(sys, K));
  if (!ok) throw verification_error("enclosure not certified; increase K");
  return e0;
}

RationalInterval theta_from_xi(const TransitionMatrix& m, const RationalInterval& xi) {
  const RationalInterval a11(Rational(m.a11));
  return a11 + Rational(m.a12 + m.a21) * xi + Rational(m.a22) * pow(xi, 2);
}

RationalInterval theta_enclosure(const ExtremalSystem& sys) {
  if (sys.theta()) return *sys.theta();
  return theta_from_xi(sys.seed().M, xi_enclosure(sys));
}

ConditionReport verify_conditions(const ExtremalSystem& sys) {
  const std::size_t K = sys.length();
  if (K < 8) throw std::invalid_argument("verify_conditions: window length must be >= 8");
  ConditionReport rep;
  rep.window = K;
  const Seed& seed = sys.seed();
  if (!seed.M.admissible()) rep.failures.push_back("transition matrix is not admissible");
  if (!(sys.x(1) == seed.x1) || !(sys.x(2) == seed.x2)) rep.failures.push_back("window does not start with the seed");

  for (std::size_t k = 1; k <= K; ++k) {
    const SymTriple& x = sys.x(static_cast<long>(k));
    rep.det2.push_back(x.det());
    if (rep.det2.back() != 1) rep.failures.push_back("E3: det(x_" + std::to_string(k) + ") != 1");
    if (x.x0 == 0) rep.failures.push_back("x_" + std::to_string(k) + " has zero first coordinate");
  }
  for (std::size_t k = 3; k <= K; ++k) {
    const long j = static_cast<long>(k) - 1;
    const Mat2 prod = sys.x(j).matrix() * step_matrix(seed.M, j).matrix() * sys.x(j - 1).matrix();
    if (!(prod == sys.x(static_cast<long>(k)).matrix()))
      rep.failures.push_back("recurrence fails at x_" + std::to_string(k));
  }
  for (std::size_t k = 1; k + 2 <= K; ++k) {
    const long kk = static_cast<long>(k);
    rep.det3.push_back(det3(sys.x(kk), sys.x(kk + 1), sys.x(kk + 2)));
    if (rep.det3.back() == 0) rep.failures.push_back("E4: det(x_" + std::to_string(k) + ", ...) = 0");
  }
  rep.det3_constant_abs = true;
  for (const auto& v : rep.det3) rep.det3_constant_abs = rep.det3_constant_abs && abs(v) == abs(rep.det3.front());

  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  for (std::size_t k = 1; k < K; ++k) {
    const Integer& a = sys.x(static_cast<long>(k)).x0;
    const Integer& b = sys.x(static_cast<long>(k) + 1).x0;
    if (abs(a) < 2 || b == 0) continue;
    rep.e1.push_back({static_cast<long>(k), log_abs(b) / log_abs(a)});
  }
  for (std::size_t t = rep.e1.size() >= 4 ? rep.e1.size() - 4 : 0; t < rep.e1.size(); ++t)
    rep.e1_tail_deviation = std::max(rep.e1_tail_deviation, std::fabs(rep.e1[t].value - golden));

  if (rep.exact_ok()) {
    try {
      const RationalInterval xi = xi_enclosure(sys);
      const RationalInterval xi2 = pow(xi, 2);
      for (std::size_t k = 1; k + 2 <= K; ++k) {
        const SymTriple& x = sys.x(static_cast<long>(k));
        const Rational scale = abs(x.x0);
        const RationalInterval p = Rational(x.x0) * xi - RationalInterval(Rational(x.x1));
        const RationalInterval q = Rational(x.x0) * xi2 - RationalInterval(Rational(x.x2));
        rep.e2_first.push_back({static_cast<long>(k), Rational(p.mag() * scale).get_d()});
        rep.e2_second.push_back({static_cast<long>(k), Rational(q.mag() * scale).get_d()});
        rep.e2_sup = std::max({rep.e2_sup, rep.e2_first.back().value, rep.e2_second.back().value});
      }
    } catch (const verification_error& e) {
      rep.failures.push_back(std::string("E2: ") + e.what());
    }
  }
  return rep;
}

bool no_growth_trend(const std::vector<ExponentSample>& samples, std::size_t span) {
  if (span < 2 || samples.size() < span) throw std::invalid_argument("no_growth_trend: not enough samples");
  const std::size_t start = samples.size() - span, half = span / 2;
  double early = 0, late = 0;
  for (std::size_t t = 0; t < span; ++t) {
    double& bucket = t < half ? early : late;
    bucket = std::max(bucket, samples[start + t].value);
  }
  return late <= 2 * early;
}

std::vector<Integer> germ_window(const ExtremalSystem& sys, long i, int j, long k_first, long k_last) {
  if (j < 0 || j > 2) throw std::invalid_argument("germ_window: coordinate must be 0, 1 or 2");
  if (k_first > k_last) throw std::invalid_argument("germ_window: empty range");
  if (2 * k_first + i < 1 || 2 * k_last + i > static_cast<long>(sys.length()))
    throw std::out_of_range("germ_window: requested indices leave the window");
  std::vector<Integer> out;
  for (long k = k_first; k <= k_last; ++k) out.push_back(sys.x(2 * k + i)[j]);
  return out;
}

long last_germ_index(const ExtremalSystem& sys, long i) {
  const long top = static_cast<long>(sys.length()) - i;
  return top >= 0 ? top / 2 : -((1 - top) / 2);
}

std::vector<Rational> ratio_check(std::span<const Integer> numerators, std::span<const Integer> denominators) {
  if (numerators.size() != denominators.size()) throw std::invalid_argument("ratio_check: length mismatch");
  std::vector<Rational> out;
  out.reserve(numerators.size());
  for (std::size_t t = 0; t < numerators.size(); ++t) {
    if (denominators[t] == 0) throw std::domain_error("ratio_check: zero denominator at index " + std::to_string(t));
    Rational r(numerators[t], denominators[t]);
    r.canonicalize();
    out.push_back(std::move(r));
  }
  return out;
}

namespace {
Rational signed_power(const Integer& base, long e) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}
}  // namespace

RationalInterval x0_growth_ratio(const ExtremalSystem& sys, long i, long k) {
  const Integer& target = sys.x(2 * k + i).x0;
  const Rational base = signed_power(sys.x(2 * k).x0, fib64(i)) * signed_power(sys.x(2 * k - 1).x0, fib64(i - 1));
  const RationalInterval theta = pow(theta_enclosure(sys), fib64(i + 1) - 1);
  return Rational(target / base) * (RationalInterval(Rational(1)) / theta);
}

bool within_of_one(const RationalInterval& ratio, const Rational& tol) {
  return ratio.lo() >= 1 - tol && ratio.hi() <= 1 + tol;
}

}  // namespace zgring
