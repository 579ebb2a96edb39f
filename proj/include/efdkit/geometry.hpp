#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efdkit/numeric.hpp"

namespace efdkit {

using RationalVector = std::vector<Rational>;

/// Homogeneous integer linear form c . x over x1..xn.
struct LinearForm {
  std::vector<std::int64_t> coeffs;

  LinearForm() = default;
  explicit LinearForm(std::vector<std::int64_t> c) : coeffs(std::move(c)) {}
  static LinearForm zero(std::size_t n) { return LinearForm(std::vector<std::int64_t>(n, 0)); }
  static LinearForm unit(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return coeffs.size(); }
  bool is_zero() const noexcept;
  Rational evaluate(const RationalVector& x) const;

  LinearForm operator+(const LinearForm& o) const;
  LinearForm operator-(const LinearForm& o) const;
  LinearForm operator-() const;
  LinearForm scaled(std::int64_t k) const;
  /// Divides by the gcd of the coefficients (zero stays zero).
  LinearForm primitive() const;

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& f);

/// Conjunction of rows . x >= 0 in dimension n.
struct IneqSystem {
  std::size_t n = 0;
  std::vector<LinearForm> rows;

  /// Throws DimensionMismatch when a row has the wrong length.
  void validate() const;
  bool satisfied_by(const RationalVector& x) const;
};

struct FullDimResult {
  bool full = false;
  /// n linearly independent solutions when full.
  std::vector<RationalVector> basis;
  /// Nonzero form vanishing on every solution when not full.
  std::optional<LinearForm> vanishing;
};

FullDimResult is_full_dimensional(const IneqSystem& s);

/// Exact phase-one simplex: some x in Q^n with A x >= b, or nullopt.
std::optional<RationalVector> find_feasible(const std::vector<RationalVector>& a, const RationalVector& b,
                                            std::size_t n);

/// Up to `budget` distinct integer solutions, from a seeded search over boxes of radius 1, 2, 4, ...
std::vector<RationalVector> sample_solutions(const IneqSystem& s, std::size_t budget,
                                             std::uint64_t seed = kDefaultSeed);

/// Rank of a family of vectors over Q.
std::size_t rank_of(const std::vector<RationalVector>& vs);

}  // namespace efdkit
