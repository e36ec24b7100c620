#include "zgring/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgring {

namespace {
constexpr const char* kNames[kNumVars] = {"X0", "X1", "X2", "X0*", "X1*", "X2*", "U", "V", "V*"};
}

std::int64_t total_degree(const Exponent& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

BiDegree block_degree(const Exponent& e) {
  return {std::int64_t{e[X0]} + e[X1] + e[X2] + e[V], std::int64_t{e[Y0]} + e[Y1] + e[Y2] + e[VS]};
}

bool GrLex::operator()(const Exponent& a, const Exponent& b) const {
  const auto da = zgring::total_degree(a), db = zgring::total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::var(Var v) {
  Exponent e{};
  e[v] = 1;
  return monomial(e);
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

Rational MPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  r += b;
  return r;
}

MPoly operator-(const MPoly& a) {
  MPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

MPoly operator*(const Rational& k, const MPoly& a) {
  if (k == 0) return {};
  MPoly r = a;
  for (auto& [e, c] : r.terms_) c *= k;
  return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e;
      for (int v = 0; v < kNumVars; ++v) {
        const unsigned s = unsigned{ea[v]} + eb[v];
        if (s > 0xffff) throw std::overflow_error("MPoly: exponent overflow");
        e[v] = static_cast<std::uint16_t>(s);
      }
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(Rational(1)), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::int64_t MPoly::total_degree() const {
  return terms_.empty() ? -1 : zgring::total_degree(terms_.begin()->first);
}

BiDegree MPoly::bidegree() const {
  BiDegree d;
  for (const auto& [e, c] : terms_) {
    const BiDegree b = block_degree(e);
    d = {std::max(d.d1, b.d1), std::max(d.d2, b.d2)};
  }
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return zgring::total_degree(t.first) == d; });
}

MPoly MPoly::homogenize_total(std::int64_t d) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    const auto k = zgring::total_degree(e);
    if (k > d) throw std::invalid_argument("homogenize_total: degree exceeds target");
    Exponent f = e;
    f[U] = static_cast<std::uint16_t>(f[U] + (d - k));
    r.add_term(f, c);
  }
  return r;
}

MPoly MPoly::homogenize_bi(std::int64_t d1, std::int64_t d2) const {
  MPoly r;
  for (const auto& [e, c] : terms_) {
    const BiDegree b = block_degree(e);
    if (b.d1 > d1 || b.d2 > d2) throw std::invalid_argument("homogenize_bi: bi-degree exceeds target");
    Exponent f = e;
    f[V] = static_cast<std::uint16_t>(f[V] + (d1 - b.d1));
    f[VS] = static_cast<std::uint16_t>(f[VS] + (d2 - b.d2));
    r.add_term(f, c);
  }
  return r;
}

Rational MPoly::evaluate(std::span<const Integer> values) const {
  if (values.size() != kNumVars) throw std::invalid_argument("evaluate: need one value per variable");
  // cache powers per variable
  std::array<std::vector<Integer>, kNumVars> powers;
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Integer m = 1;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      auto& pv = powers[v];
      if (pv.empty()) pv.push_back(1);
      while (pv.size() <= e[v]) pv.push_back(pv.back() * values[v]);
      m *= pv[e[v]];
    }
    sum += c * m;
  }
  return sum;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    bool first = true;
    for (int v = 0; v < kNumVars; ++v) {
      if (e[v] == 0) continue;
      out += first ? " * " : " ";
      first = false;
      out += kNames[v];
      if (e[v] > 1) out += "^" + std::to_string(e[v]);
    }
  }
  return out;
}

std::vector<Exponent> monomials_of_degree(std::span<const Var> vars, std::int64_t d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent e{};
  // distribute d over vars, first variable highest exponent first
  auto rec = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
    if (idx + 1 == vars.size()) {
      e[vars[idx]] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      e[vars[idx]] = 0;
      return;
    }
    for (std::int64_t k = left; k >= 0; --k) {
      e[vars[idx]] = static_cast<std::uint16_t>(k);
      self(self, idx + 1, left - k);
    }
    e[vars[idx]] = 0;
  };
  if (vars.empty()) {
    if (d == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrLex{});
  return out;
}

std::vector<Exponent> monomials_of_bidegree(std::int64_t n1, std::int64_t n2) {
  static constexpr Var left[] = {X0, X1, X2, V};
  static constexpr Var right[] = {Y0, Y1, Y2, VS};
  std::vector<Exponent> out;
  for (const auto& a : monomials_of_degree(left, n1))
    for (const auto& b : monomials_of_degree(right, n2)) {
      Exponent e = a;
      for (int v = 0; v < kNumVars; ++v) e[v] = static_cast<std::uint16_t>(e[v] + b[v]);
      out.push_back(e);
    }
  std::sort(out.begin(), out.end(), GrLex{});
  return out;
}

std::vector<Exponent> monomials_total(std::int64_t d) {
  static constexpr Var vars[] = {X0, X1, X2, Y0, Y1, Y2, U};
  return monomials_of_degree(vars, d);
}

}  // namespace zgring
