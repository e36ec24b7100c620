#pragma once

/**
 * @file combinatorics.hpp
 * @brief Representations of non-negative elements of Z[gamma] by powers of
 *        1/gamma, and the quad calculus built on them.
 *
 * A representation is a non-decreasing list of indices (i_1, ..., i_s) with
 * alpha = sum gamma^{-i_k}. Its degree is sum f(i_k), its bi-degree is
 * (sum f(i_k - 2), sum f(i_k - 1)) and its size is s. A quad (i; a, b, c)
 * packs a copies of i, b copies of i+1 and c copies of i+2.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "zgring/zgamma.hpp"

namespace zgring {

struct Representation {
  std::vector<std::int64_t> indices;  // non-decreasing

  ZGamma value() const;
  std::int64_t degree() const;
  BiDegree bidegree() const;
  std::int64_t size() const { return static_cast<std::int64_t>(indices.size()); }
};

/// (i; a, b, c) standing for a*g^{-i} + b*g^{-i-1} + c*g^{-i-2}, with a >= 1.
struct Quad {
  std::int64_t i = 0;
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;

  friend bool operator==(const Quad&, const Quad&) = default;

  ZGamma value() const;
  std::int64_t size() const { return a + b + c; }
  std::int64_t degree() const;
  BiDegree bidegree() const;
  Representation expand() const;
};

/// Throws std::invalid_argument unless a >= 1 and i, b, c >= 0.
void check_quad(const Quad& q);

struct PartitionClass {
  enum class Tag { Zero, Plus, Band };
  Tag tag = Tag::Zero;
  std::int64_t band = 0;  // meaningful for Band
  // Coordinates in the basis {g^{-i}, g^{-i-2}} (Band) or {1, 1/g} (Plus).
  Integer first = 0;
  Integer second = 0;

  bool operator==(const PartitionClass& o) const {
    return tag == o.tag && (tag != Tag::Band || band == o.band);
  }
};

/// Which piece of E* = E(+) u E(0) u E(1) u ... contains alpha; alpha must be >= 0.
PartitionClass classify(const ZGamma& alpha);

/// Smallest quad representing alpha; empty for alpha = 0.
std::optional<Quad> canonical_quad(const ZGamma& alpha);

/// Next quad of Q_alpha: same value, size + 1.
Quad theta_step(const Quad& q);

/// Bi-degree preserving, size decreasing map on quads with b >= 1; empty when b = 0.
std::optional<Quad> psi_step(const Quad& q);

/// Bounded walk through Q_alpha in increasing size.
class QuadChain {
 public:
  explicit QuadChain(const ZGamma& alpha);
  const Quad& current() const { return current_; }
  const Quad& next();

 private:
  Quad current_;
};

/// First max_count elements of Q_alpha (alpha > 0).
std::vector<Quad> quads_of_alpha(const ZGamma& alpha, std::size_t max_count);

/// All quads of bi-degree exactly (d1, d2), by decreasing size.
std::vector<Quad> quads_of_bidegree(std::int64_t d1, std::int64_t d2);

/// The quad of largest degree <= d representing alpha (alpha != 0, degree(alpha) <= d).
Quad max_quad_for_degree(const ZGamma& alpha, std::int64_t d);
/// The quad of largest bi-degree <= (d1, d2) representing alpha.
Quad max_quad_for_bidegree(const ZGamma& alpha, std::int64_t d1, std::int64_t d2);

/// s_d(alpha); s_d(0) = 0.
std::int64_t size_rel_degree(const ZGamma& alpha, std::int64_t d);
/// s_(d1,d2)(alpha); zero for alpha = 0.
std::int64_t size_rel_bidegree(const ZGamma& alpha, std::int64_t d1, std::int64_t d2);

/// E_d, sorted lexicographically by (m, n).
std::vector<ZGamma> enumerate_Ed(std::int64_t d);
/// E_(d1,d2), sorted lexicographically by (m, n).
std::vector<ZGamma> enumerate_Ebd(std::int64_t d1, std::int64_t d2);

std::int64_t chi_total(std::int64_t d, std::int64_t s);
std::int64_t chi_bi(std::int64_t d1, std::int64_t d2, std::int64_t s);

/// chi_d(0..d) and chi_(d1,d2)(0..d1+d2).
std::vector<std::int64_t> chi_total_table(std::int64_t d);
std::vector<std::int64_t> chi_bi_table(std::int64_t d1, std::int64_t d2);

/// Histogram of s_d over E_d computed through the quad calculus.
std::vector<std::int64_t> size_histogram_total(std::int64_t d);
std::vector<std::int64_t> size_histogram_bi(std::int64_t d1, std::int64_t d2);

}  // namespace zgring
