#include "zgring/oracle.hpp"

#include <functional>

#include "zgring/errors.hpp"

namespace zgring {

namespace {

// Depth-first walk over non-decreasing index lists. `cost(i)` is the pair of
// partial degrees charged for index i; `fits` tests the running total.
void walk(const std::function<BiDegree(std::int64_t)>& cost,
          const std::function<bool(const BiDegree&)>& fits, std::int64_t max_index,
          OracleMap& out) {
  std::vector<std::int64_t> indices;
  ZGamma value;

  auto record = [&] {
    const auto s = static_cast<std::int64_t>(indices.size());
    const bool quad_shaped = indices.empty() || indices.back() <= indices.front() + 2;
    auto [it, inserted] = out.try_emplace(value);
    OracleEntry& e = it->second;
    if (inserted || s > e.max_size) {
      e.max_size = s;
      e.quad_shaped_witness = quad_shaped;
      e.witness.indices = indices;
    } else if (s == e.max_size && quad_shaped && !e.quad_shaped_witness) {
      e.quad_shaped_witness = true;
      e.witness.indices = indices;
    }
  };

  std::function<void(std::int64_t, BiDegree)> dfs = [&](std::int64_t start, BiDegree used) {
    record();
    for (std::int64_t i = start; i <= max_index; ++i) {
      const BiDegree next = used + cost(i);
      if (!fits(next)) continue;
      indices.push_back(i);
      const ZGamma saved = value;
      value = value + gamma_pow_neg(i);
      dfs(i, next);
      value = saved;
      indices.pop_back();
    }
  };
  dfs(0, {});
}

}  // namespace

OracleMap oracle_sizes_total(std::int64_t d) {
  if (d < 0) throw std::invalid_argument("oracle_sizes_total: d must be >= 0");
  if (d > kOracleMaxDegree) throw bound_exceeded("oracle_sizes_total: d exceeds the exhaustive bound");
  // f(i) <= d forces i <= max_index
  std::int64_t max_index = 0;
  while (fib64(max_index + 1) <= d) ++max_index;
  OracleMap out;
  walk([](std::int64_t i) { return BiDegree{fib64(i), 0}; },
       [d](const BiDegree& b) { return b.d1 <= d; }, max_index, out);
  return out;
}

OracleMap oracle_sizes_bi(std::int64_t d1, std::int64_t d2) {
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("oracle_sizes_bi: degrees must be >= 0");
  if (d1 + d2 > kOracleMaxDegree) throw bound_exceeded("oracle_sizes_bi: d1 + d2 exceeds the exhaustive bound");
  // index i costs (f(i-2), f(i-1)); for i >= 2 both parts are >= f(i-2)
  std::int64_t max_index = 1;
  while (fib64(max_index - 1) <= std::max(d1, d2)) ++max_index;
  OracleMap out;
  const BiDegree bound{d1, d2};
  walk([](std::int64_t i) { return BiDegree{fib64(i - 2), fib64(i - 1)}; },
       [bound](const BiDegree& b) { return b.fits_in(bound); }, max_index, out);
  return out;
}

std::vector<std::int64_t> oracle_histogram(const OracleMap& sizes) {
  std::vector<std::int64_t> hist;
  for (const auto& [alpha, entry] : sizes) {
    const auto s = static_cast<std::size_t>(entry.max_size);
    if (s >= hist.size()) hist.resize(s + 1, 0);
    ++hist[s];
  }
  return hist;
}

}  // namespace zgring
