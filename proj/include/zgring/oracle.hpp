#pragma once

/**
 * @file oracle.hpp
 * @brief Exhaustive enumeration of representations, independent of the quad
 *        calculus. Intended as a reference for small degrees only.
 */

#include <cstdint>
#include <map>
#include <vector>

#include "zgring/combinatorics.hpp"

namespace zgring {

/// Largest admissible bound for the exhaustive search (d, resp. d1 + d2).
inline constexpr std::int64_t kOracleMaxDegree = 10;

struct OracleEntry {
  std::int64_t max_size = 0;
  // some maximal-size representation satisfies i_s <= i_1 + 2
  bool quad_shaped_witness = false;
  Representation witness;  // one maximal-size representation
};

using OracleMap = std::map<ZGamma, OracleEntry, LexLess>;

/// All alpha with a representation of degree <= d, with their maximal size.
OracleMap oracle_sizes_total(std::int64_t d);
/// All alpha with a representation of bi-degree <= (d1, d2), with their maximal size.
OracleMap oracle_sizes_bi(std::int64_t d1, std::int64_t d2);

/// Histogram of max_size over the map, indexed by size.
std::vector<std::int64_t> oracle_histogram(const OracleMap& sizes);

}  // namespace zgring
