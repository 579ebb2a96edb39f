#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace efdkit {

/// A finite set of primes, or the complement of one (cofinite).
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts and deduplicates; throws InvalidArgument on a non-prime.
  static PrimeSet finite(std::vector<std::int64_t> primes);
  static PrimeSet cofinite(std::vector<std::int64_t> excluded);
  static PrimeSet all() { return cofinite({}); }
  /// Prime support of k >= 1.
  static PrimeSet of_integer(std::int64_t k);

  bool is_finite() const noexcept { return !cofinite_; }
  bool is_empty() const noexcept { return !cofinite_ && listed_.empty(); }
  /// The members (finite) or the excluded primes (cofinite), sorted.
  const std::vector<std::int64_t>& listed() const noexcept { return listed_; }

  bool contains(std::int64_t p) const;
  bool subset_of(const PrimeSet& other) const;
  PrimeSet unite(const PrimeSet& other) const;
  PrimeSet intersect(const PrimeSet& other) const;

  /// "{2,3}", "{}" or "all\{5}".
  std::string to_string() const;
  static PrimeSet parse(const std::string& text);

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  bool cofinite_ = false;
  std::vector<std::int64_t> listed_;
};

/// G: subclasses of Abelian l-groups; P: subclasses of the perfect MV-algebras.
enum class Family { G, P };

/// Canonical AE-class. Boolean only exists in the P family.
struct AEClass {
  enum class Kind { Trivial, Boolean, Divisible };
  Family family = Family::G;
  Kind kind = Kind::Divisible;
  PrimeSet primes;

  static AEClass trivial(Family f) { return {f, Kind::Trivial, {}}; }
  static AEClass boolean() { return {Family::P, Kind::Boolean, {}}; }
  static AEClass divisible(Family f, PrimeSet s) { return {f, Kind::Divisible, std::move(s)}; }

  /// Throws InvalidArgument for a Boolean class in the G family.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const AEClass&, const AEClass&) = default;
};

std::string to_string(Family f);

}  // namespace efdkit
