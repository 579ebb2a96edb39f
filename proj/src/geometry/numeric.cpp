#include "efdkit/numeric.hpp"

#include <cstdlib>
#include <numeric>

#include "efdkit/errors.hpp"

namespace efdkit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

std::int64_t gcd_all(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) {
    if (v == INT64_MIN) throw OverflowError("gcd of INT64_MIN");
    g = std::gcd(g, v);
  }
  if (g == 0) throw InvalidArgument("gcd_all needs a nonzero value");
  return g;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  const auto g = std::gcd(a, b);
  return std::abs(checked_mul(a / g, b));
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t k) {
  if (k == 0) throw InvalidArgument("prime_factors(0)");
  std::vector<std::int64_t> out;
  std::uint64_t n = k < 0 ? 0 - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::int64_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::int64_t>(n));
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw InvalidArgument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0) throw InvalidArgument("malformed rational '" + text + "'");
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace efdkit
