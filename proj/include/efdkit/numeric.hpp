#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace efdkit {

using Rational = mpq_class;

/// Default seed for every randomized routine; overridable per call.
inline constexpr std::uint64_t kDefaultSeed = 1729;

// int64 arithmetic that throws OverflowError instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

/// Positive gcd of the absolute values; throws InvalidArgument when every value is zero.
std::int64_t gcd_all(std::span<const std::int64_t> values);
std::int64_t lcm(std::int64_t a, std::int64_t b);

bool is_prime(std::int64_t p);
/// Distinct prime divisors of |k| in increasing order (empty for k = 1).
std::vector<std::int64_t> prime_factors(std::int64_t k);

/// Parses "p/q", "p" or "-p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace efdkit
