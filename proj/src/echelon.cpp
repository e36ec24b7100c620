#include "zgring/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgring {

SparseRow normalize_row(std::vector<std::pair<std::size_t, Integer>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c) {
      out.back().second += v;
      if (out.back().second == 0) out.pop_back();
    } else if (v != 0) {
      out.emplace_back(c, std::move(v));
    }
  }
  return out;
}

Integer make_primitive(SparseRow& row) {
  if (row.empty()) return 1;
  Integer g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return g;
}

namespace {

// a*r + b*p
SparseRow combine(const Integer& a, const SparseRow& r, const Integer& b, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.emplace_back(r[i].first, a * r[i].second);
      ++i;
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, b * p[j].second);
      ++j;
    } else {
      Integer v = a * r[i].second + b * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates the entry at position `pos` of r using pivot p; returns the factor applied to r.
Integer eliminate(SparseRow& r, std::size_t pos, const SparseRow& p) {
  const Integer& rc = r[pos].second;
  const Integer& pc = p.front().second;
  Integer g;
  mpz_gcd(g.get_mpz_t(), rc.get_mpz_t(), pc.get_mpz_t());
  Integer a = pc / g, b = -(rc / g);
  r = combine(a, r, b, p);
  return a;
}

}  // namespace

Echelon::Insertion Echelon::insert(SparseRow row) {
  make_primitive(row);
  while (!row.empty() && row.front().first < width_) {
    auto it = pivots_.find(row.front().first);
    if (it == pivots_.end()) {
      make_primitive(row);
      pivots_.emplace(row.front().first, std::move(row));
      return {true, {}};
    }
    eliminate(row, 0, it->second);
    make_primitive(row);
  }
  return {false, std::move(row)};
}

Echelon::Reduction Echelon::reduce(SparseRow row) const {
  Reduction out;
  std::size_t pos = 0;
  while (pos < row.size() && row[pos].first < width_) {
    auto it = pivots_.find(row[pos].first);
    if (it == pivots_.end()) {
      ++pos;
      continue;
    }
    const std::size_t col = row[pos].first;
    out.scale *= eliminate(row, pos, it->second);
    const Integer g = make_primitive(row);
    out.scale /= g;
    // the entry at `col` vanished; entries before it are untouched
    pos = static_cast<std::size_t>(
        std::lower_bound(row.begin(), row.end(), col, [](const auto& e, std::size_t c) { return e.first < c; }) -
        row.begin());
  }
  out.remainder = std::move(row);
  return out;
}

std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t width, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("rank_mod_p: modulus must be prime");
  const std::uint64_t P = p;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint64_t> dense(width, 0);
    for (const auto& [c, v] : r) {
      if (c >= width) continue;
      dense[c] = mpz_fdiv_ui(v.get_mpz_t(), p);
    }
    m.push_back(std::move(dense));
  }
  auto inverse = [P](std::uint64_t a) {
    std::uint64_t r = 1, e = P - 2;
    while (e) {
      if (e & 1) r = r * a % P;
      a = a * a % P;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    const std::uint64_t inv = inverse(m[rank][c]);
    for (std::size_t k = c; k < width; ++k) m[rank][k] = m[rank][k] * inv % P;
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const std::uint64_t f = m[r][c];
      if (f == 0) continue;
      for (std::size_t k = c; k < width; ++k) m[r][k] = (m[r][k] + (P - f) * m[rank][k]) % P;
    }
    ++rank;
  }
  return rank;
}

}  // namespace zgring
