#include "zgring/ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "zgring/errors.hpp"

namespace zgring {

namespace {

struct PMat {
  MPoly a11, a12, a21, a22;
};

PMat operator*(const PMat& a, const PMat& b) {
  return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22, a.a21 * b.a11 + a.a22 * b.a21,
          a.a21 * b.a12 + a.a22 * b.a22};
}

PMat sym(const CoordTriple& t) { return {t[0], t[1], t[1], t[2]}; }

PMat constant(const TransitionMatrix& m) {
  return {MPoly(Rational(m.a11)), MPoly(Rational(m.a12)), MPoly(Rational(m.a21)), MPoly(Rational(m.a22))};
}

PMat adjugate(const PMat& p) { return {p.a22, -p.a12, -p.a21, p.a11}; }

CoordTriple coords_of(const PMat& p) { return {p.a11, p.a12, p.a22}; }

CoordTriple base_triple(Var first) {
  return {MPoly::var(first), MPoly::var(static_cast<Var>(first + 1)), MPoly::var(static_cast<Var>(first + 2))};
}

// generators multiplied by every monomial of complementary degree, over a fixed column set
struct Component {
  std::map<Exponent, std::size_t, GrLex> columns;
  std::vector<SparseRow> rows;
};

SparseRow row_of(const MPoly& p, const std::map<Exponent, std::size_t, GrLex>& columns, Integer* denominator) {
  Integer den = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::pair<std::size_t, Integer>> entries;
  for (const auto& [e, c] : p.terms()) {
    auto it = columns.find(e);
    if (it == columns.end()) throw std::logic_error("polynomial leaves the homogeneous component");
    entries.emplace_back(it->second, Integer(c * den));
  }
  if (denominator) *denominator = den;
  return normalize_row(std::move(entries));
}

Component component_total(std::int64_t d, const TransitionMatrix& m) {
  Component c;
  for (const auto& e : monomials_total(d)) c.columns.emplace(e, c.columns.size());
  if (d >= 2) {
    const auto shifts = monomials_total(d - 2);
    for (const auto& g : ideal(IdealKind::I1, m).generators)
      for (const auto& e : shifts) c.rows.push_back(row_of(MPoly::monomial(e) * g, c.columns, nullptr));
  }
  return c;
}

Component component_bi(std::int64_t d1, std::int64_t d2, const TransitionMatrix& m) {
  Component c;
  for (const auto& e : monomials_of_bidegree(d1, d2)) c.columns.emplace(e, c.columns.size());
  for (const auto& g : ideal(IdealKind::I2, m).generators) {
    const BiDegree b = g.bidegree();
    if (b.d1 > d1 || b.d2 > d2) continue;
    for (const auto& e : monomials_of_bidegree(d1 - b.d1, d2 - b.d2))
      c.rows.push_back(row_of(MPoly::monomial(e) * g, c.columns, nullptr));
  }
  return c;
}

std::int64_t exact_rank(const Component& c) {
  Echelon ech(c.columns.size());
  for (const auto& r : c.rows) ech.insert(r);
  return static_cast<std::int64_t>(ech.rank());
}

Rational signed_power(const Integer& base, long e) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(std::labs(e)));
  if (e >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

}  // namespace

MPoly det_X() { return MPoly::var(X0) * MPoly::var(X2) - MPoly::var(X1) * MPoly::var(X1); }
MPoly det_Xstar() { return MPoly::var(Y0) * MPoly::var(Y2) - MPoly::var(Y1) * MPoly::var(Y1); }

MPoly phi(const TransitionMatrix& m) {
  const PMat p = sym(base_triple(X0)) * constant(m) * sym(base_triple(Y0));
  return p.a21 - p.a12;
}

CoordinatePolys::CoordinatePolys(TransitionMatrix m, long bound) : m_(m), bound_(bound) {
  if (!m_.admissible()) throw std::invalid_argument("transition matrix must be admissible");
  cache_.emplace(0, base_triple(X0));
  cache_.emplace(-1, base_triple(Y0));
}

const CoordTriple& CoordinatePolys::operator()(long i) {
  if (std::labs(i) > bound_)
    throw bound_exceeded("coordinate polynomials limited to |i| <= " + std::to_string(bound_));
  if (auto it = cache_.find(i); it != cache_.end()) return it->second;
  CoordTriple t;
  if (i > 0) {
    const PMat p = sym((*this)(i - 1)) * constant(step_matrix(m_, i - 1)) * sym((*this)(i - 2));
    t = coords_of(p);
  } else {
    const PMat p = adjugate(sym((*this)(i + 1)) * constant(step_matrix(m_, i + 1))) * sym((*this)(i + 2));
    t = coords_of(p);
  }
  return cache_.emplace(i, std::move(t)).first->second;
}

CoordTriple coord_polys(long i, const TransitionMatrix& m, long bound) {
  CoordinatePolys c(m, bound);
  return c(i);
}

Ideal ideal(IdealKind kind, const TransitionMatrix& m) {
  Ideal out;
  out.kind = kind;
  MPoly c1, c2;
  switch (kind) {
    case IdealKind::I:
      c1 = c2 = MPoly(Rational(1));
      break;
    case IdealKind::I1:
      c1 = c2 = MPoly::var(U).pow(2);
      break;
    case IdealKind::I2:
      c1 = MPoly::var(V).pow(2);
      c2 = MPoly::var(VS).pow(2);
      break;
  }
  out.generators = {det_X() - c1, det_Xstar() - c2, phi(m)};
  return out;
}

Integer hilbert_I1_closed(std::int64_t d) {
  const Integer D = static_cast<long>(d);
  return (4 * D * D * D + 6 * D * D + 8 * D + 3) / 3;
}

Integer hilbert_I2_closed(std::int64_t d1, std::int64_t d2) {
  const Integer a = static_cast<long>(d1), b = static_cast<long>(d2);
  return (a + 1) * (a + 1) * (b + 1) * (b + 1) - a * a * b * b;
}

HilbertResult hilbert_I1(std::int64_t d, const TransitionMatrix& m, std::int64_t max_degree) {
  if (d < 0) throw std::invalid_argument("hilbert_I1: degree must be >= 0");
  if (d > max_degree) throw bound_exceeded("hilbert_I1: degree above the configured bound " + std::to_string(max_degree));
  const Component c = component_total(d, m);
  HilbertResult r;
  r.monomials = static_cast<std::int64_t>(c.columns.size());
  r.ideal_rank = exact_rank(c);
  r.computed = r.monomials - r.ideal_rank;
  r.expected = hilbert_I1_closed(d);
  return r;
}

HilbertResult hilbert_I2(std::int64_t d1, std::int64_t d2, const TransitionMatrix& m, std::int64_t max_degree) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("hilbert_I2: degrees must be >= 0");
  if (d1 > max_degree || d2 > max_degree)
    throw bound_exceeded("hilbert_I2: bi-degree above the configured bound " + std::to_string(max_degree));
  const Component c = component_bi(d1, d2, m);
  HilbertResult r;
  r.monomials = static_cast<std::int64_t>(c.columns.size());
  r.ideal_rank = exact_rank(c);
  r.computed = r.monomials - r.ideal_rank;
  r.expected = hilbert_I2_closed(d1, d2);
  return r;
}

std::int64_t ideal_rank_mod_p_I1(std::int64_t d, const TransitionMatrix& m, std::uint32_t p) {
  const Component c = component_total(d, m);
  return static_cast<std::int64_t>(rank_mod_p(c.rows, c.columns.size(), p));
}

std::int64_t ideal_rank_mod_p_I2(std::int64_t d1, std::int64_t d2, const TransitionMatrix& m, std::uint32_t p) {
  const Component c = component_bi(d1, d2, m);
  return static_cast<std::int64_t>(rank_mod_p(c.rows, c.columns.size(), p));
}

DegreeBound DegreeBound::total(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("degree bound must be >= 0");
  DegreeBound b;
  b.kind = Kind::Total;
  b.d = d;
  return b;
}

DegreeBound DegreeBound::bi(std::int64_t d1, std::int64_t d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("bi-degree bound must be >= 0");
  DegreeBound b;
  b.kind = Kind::Bi;
  b.d1 = d1;
  b.d2 = d2;
  return b;
}

bool DegreeBound::contains(const ZGamma& alpha) const {
  if (sign(alpha) < 0) return false;
  return kind == Kind::Total ? degree(alpha) <= d : bidegree(alpha).fits_in({d1, d2});
}

std::int64_t DegreeBound::size_of(const ZGamma& alpha) const {
  return kind == Kind::Total ? size_rel_degree(alpha, d) : size_rel_bidegree(alpha, d1, d2);
}

std::optional<Quad> DegreeBound::quad_of(const ZGamma& alpha) const {
  if (alpha.is_zero()) return std::nullopt;
  return kind == Kind::Total ? max_quad_for_degree(alpha, d) : max_quad_for_bidegree(alpha, d1, d2);
}

std::vector<ZGamma> DegreeBound::elements() const {
  return kind == Kind::Total ? enumerate_Ed(d) : enumerate_Ebd(d1, d2);
}

Integer DegreeBound::dimension() const {
  if (kind == Kind::Total) return hilbert_I1_closed(d);
  const Integer a = static_cast<long>(d1), b = static_cast<long>(d2);
  return (a + b + 1) * (2 * a * b + a + b + 1);
}

std::string DegreeBound::to_string() const {
  return kind == Kind::Total ? "d=" + std::to_string(d)
                             : "(d1,d2)=(" + std::to_string(d1) + "," + std::to_string(d2) + ")";
}

MonomialElement build_monomial(const ZGamma& alpha, std::int64_t j, const DegreeBound& bound, CoordinatePolys& coords) {
  if (!bound.contains(alpha)) throw std::domain_error("alpha " + alpha.to_string() + " is outside E for " + bound.to_string());
  MonomialElement el;
  el.alpha = alpha;
  el.j = j;
  el.bound = bound;
  el.size = bound.size_of(alpha);
  if (j < 0 || j > 2 * el.size)
    throw std::domain_error("j must lie in [0, " + std::to_string(2 * el.size) + "]");
  el.quad = bound.quad_of(alpha);
  if (el.quad) el.indices = el.quad->expand().indices;
  std::int64_t left = j;
  el.poly = MPoly(Rational(1));
  for (auto i : el.indices) {
    const int jk = static_cast<int>(std::min<std::int64_t>(left, 2));
    left -= jk;
    el.coords.push_back(jk);
    el.poly = el.poly * coords(-i)[static_cast<std::size_t>(jk)];
  }
  const bool fits = bound.kind == DegreeBound::Kind::Total ? el.poly.total_degree() <= bound.d
                                                           : el.poly.bidegree().fits_in({bound.d1, bound.d2});
  if (!fits) throw verification_error("M_(alpha,j) exceeds its degree bound for alpha " + alpha.to_string());
  return el;
}

std::vector<MonomialElement> monomial_family(const DegreeBound& bound, CoordinatePolys& coords) {
  std::vector<MonomialElement> out;
  for (const auto& alpha : bound.elements()) {
    const std::int64_t s = bound.size_of(alpha);
    for (std::int64_t j = 0; j <= 2 * s; ++j) out.push_back(build_monomial(alpha, j, bound, coords));
  }
  return out;
}

Rational evaluate_at_germ(const MPoly& p, const ExtremalSystem& sys, long k) {
  const SymTriple& x = sys.x(2 * k);
  const SymTriple& y = sys.x(2 * k - 1);
  const std::array<Integer, kNumVars> values = {x.x0, x.x1, x.x2, y.x0, y.x1, y.x2, 1, 1, 1};
  return p.evaluate(values);
}

QuotientBasis::QuotientBasis(const DegreeBound& bound, const TransitionMatrix& m, std::int64_t max_total,
                             std::int64_t max_bi)
    : bound_(bound), m_(m), echelon_(0) {
  if (bound.kind == DegreeBound::Kind::Total && bound.d > max_total)
    throw bound_exceeded("basis limited to total degree <= " + std::to_string(max_total));
  if (bound.kind == DegreeBound::Kind::Bi && (bound.d1 > max_bi || bound.d2 > max_bi))
    throw bound_exceeded("basis limited to bi-degree <= (" + std::to_string(max_bi) + "," + std::to_string(max_bi) + ")");
  Component comp = bound.kind == DegreeBound::Kind::Total ? component_total(bound.d, m)
                                                          : component_bi(bound.d1, bound.d2, m);
  columns_ = std::move(comp.columns);
  const std::size_t width = columns_.size();
  echelon_ = Echelon(width);
  for (auto& r : comp.rows) echelon_.insert(std::move(r));

  CoordinatePolys coords(m);
  family_ = monomial_family(bound, coords);

  report_.bound = bound;
  report_.cardinality = static_cast<std::int64_t>(family_.size());
  report_.expected = bound.dimension();
  report_.ambient = static_cast<std::int64_t>(width);
  report_.ideal_rank = static_cast<std::int64_t>(echelon_.rank());
  for (std::size_t t = 0; t < family_.size(); ++t) {
    Integer den;
    SparseRow row = to_row(homogenize(family_[t].poly), &den);
    row.emplace_back(width + t, den);
    auto ins = echelon_.insert(std::move(row));
    if (!ins.independent && report_.certificate.empty()) {
      report_.certificate.assign(family_.size(), Rational(0));
      for (const auto& [c, v] : ins.residual) report_.certificate[c - width] = Rational(v);
    }
  }
  report_.family_rank = static_cast<std::int64_t>(echelon_.rank()) - report_.ideal_rank;
}

MPoly QuotientBasis::homogenize(const MPoly& p) const {
  try {
    return bound_.kind == DegreeBound::Kind::Total ? p.homogenize_total(bound_.d) : p.homogenize_bi(bound_.d1, bound_.d2);
  } catch (const std::invalid_argument&) {
    throw std::domain_error("polynomial degree outside " + bound_.to_string());
  }
}

SparseRow QuotientBasis::to_row(const MPoly& homogeneous, Integer* denominator) const {
  return row_of(homogeneous, columns_, denominator);
}

std::vector<Rational> QuotientBasis::reduce(const MPoly& p) const {
  for (const auto& [e, c] : p.terms())
    if (e[U] || e[V] || e[VS]) throw std::invalid_argument("reduce: polynomial must not involve homogenizers");
  Integer den;
  SparseRow row = to_row(homogenize(p), &den);
  const auto red = echelon_.reduce(std::move(row));
  const std::size_t width = columns_.size();
  std::vector<Rational> coords(family_.size(), Rational(0));
  for (const auto& [c, v] : red.remainder) {
    if (c < width) throw verification_error("reduce: class not in the span of the family");
    Rational q = -Rational(v) / (red.scale * Rational(den));
    q.canonicalize();
    coords[c - width] = q;
  }
  return coords;
}

BasisReport basis_rank_check(const DegreeBound& bound, const TransitionMatrix& m, std::int64_t max_total,
                             std::int64_t max_bi) {
  return QuotientBasis(bound, m, max_total, max_bi).report();
}

std::vector<Rational> reduce_mod_I(const MPoly& p, std::int64_t d, const TransitionMatrix& m) {
  if (p.total_degree() > d) throw std::domain_error("reduce_mod_I: total degree exceeds d");
  return QuotientBasis(DegreeBound::total(d), m).reduce(p);
}

LeadingTerm leading_exponent(const std::vector<Rational>& coords, const QuotientBasis& basis) {
  const auto& fam = basis.family();
  if (coords.size() != fam.size()) throw std::invalid_argument("leading_exponent: coordinate count mismatch");
  std::optional<std::size_t> best;
  for (std::size_t t = 0; t < fam.size(); ++t) {
    if (coords[t] == 0) continue;
    if (!best || fam[t].alpha > fam[*best].alpha) best = t;
  }
  if (!best) throw std::domain_error("valuation undefined for the zero element");
  LeadingTerm lt;
  lt.alpha = fam[*best].alpha;
  lt.size = fam[*best].size;
  lt.A.assign(static_cast<std::size_t>(2 * lt.size + 1), Rational(0));
  for (std::size_t t = 0; t < fam.size(); ++t)
    if (fam[t].alpha == lt.alpha) lt.A[static_cast<std::size_t>(fam[t].j)] = coords[t];
  while (lt.A.size() > 1 && lt.A.back() == 0) lt.A.pop_back();
  return lt;
}

LeadingTerm leading_exponent(const MPoly& p, const QuotientBasis& basis) {
  return leading_exponent(basis.reduce(p), basis);
}

RationalInterval asymptotic_ratio(const Rational& value, const ExtremalSystem& sys, long k, const ZGamma& alpha,
                                  std::int64_t s, const std::vector<Rational>& A) {
  if (!sys.xi() || !sys.theta()) throw verification_error("asymptotic_ratio: system has no certified enclosures");
  if (!alpha.m().fits_slong_p() || !alpha.n().fits_slong_p()) throw bound_exceeded("asymptotic_ratio: alpha too large");
  const long m = alpha.m().get_si(), n = alpha.n().get_si();
  const RationalInterval& xi = *sys.xi();
  RationalInterval a(Rational(0));
  for (auto it = A.rbegin(); it != A.rend(); ++it) a = a * xi + RationalInterval(*it);
  if (!a.excludes_zero()) throw verification_error("asymptotic_ratio: A(xi) is not separated from 0");
  const RationalInterval model = pow(*sys.theta(), m + n - static_cast<long>(s)) * a;
  const Rational scale = signed_power(sys.x(2 * k).x0, m) * signed_power(sys.x(2 * k - 1).x0, n);
  Rational q = value / scale;
  return RationalInterval(q) / model;
}

}  // namespace zgring
