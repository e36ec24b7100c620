#pragma once

// Incremental row echelon form over the integers.
//
// Rows are sparse integer vectors. Columns below `width` take part in the
// elimination; columns at or above it are passive tags that record which
// combination of input rows produced a row. Every stored row is primitive
// (content 1) with a positive leading entry, so the form is deterministic.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zgring/zgamma.hpp"

namespace zgring {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column, no zeros

/// Sorts by column, merges duplicates and drops zeros.
SparseRow normalize_row(std::vector<std::pair<std::size_t, Integer>> entries);

/// Divides by the gcd of all entries and makes the first entry positive; returns the divisor (signed).
Integer make_primitive(SparseRow& row);

class Echelon {
 public:
  explicit Echelon(std::size_t width) : width_(width) {}

  struct Insertion {
    bool independent = false;
    SparseRow residual;  // when dependent: the remaining tag columns (a vanishing combination)
  };

  /// Reduces the row by the stored pivots and keeps it if something survives below `width`.
  Insertion insert(SparseRow row);

  struct Reduction {
    SparseRow remainder;
    Rational scale = 1;  // scale * input = remainder + (combination of stored rows)
  };

  /// Full reduction of every column below `width` that carries a pivot.
  Reduction reduce(SparseRow row) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t width() const { return width_; }
  const std::map<std::size_t, SparseRow>& pivots() const { return pivots_; }

 private:
  std::size_t width_;
  std::map<std::size_t, SparseRow> pivots_;  // keyed by leading column
};

/// Rank of the first `width` columns modulo the prime p (dense elimination).
std::size_t rank_mod_p(const std::vector<SparseRow>& rows, std::size_t width, std::uint32_t p);

inline constexpr std::uint32_t kDefaultPrime = 2147483629u;  // largest prime below 2^31

}  // namespace zgring
