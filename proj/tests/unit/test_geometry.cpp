#include <doctest.h>

#include "efdkit/errors.hpp"
#include "efdkit/geometry.hpp"

using namespace efdkit;

namespace {

IneqSystem sys(std::size_t n, std::vector<std::vector<std::int64_t>> rows) {
  IneqSystem s;
  s.n = n;
  for (auto& r : rows) s.rows.emplace_back(std::move(r));
  return s;
}

// Independent rank oracle: fraction-free elimination on integer-scaled rows.
std::size_t oracle_rank(const std::vector<RationalVector>& vs) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& v : vs) {
    mpz_class den = 1;
    for (const auto& q : v) den = lcm(den, mpz_class(q.get_den()));
    std::vector<mpz_class> row;
    for (const auto& q : v) row.push_back(mpz_class(q.get_num() * (den / q.get_den())));
    m.push_back(row);
  }
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      const mpz_class a = m[rank][c], b = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = a * m[r][k] - b * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("gcd_all") {
  CHECK(gcd_all(std::vector<std::int64_t>{4, 6, 2}) == 2);
  CHECK(gcd_all(std::vector<std::int64_t>{7}) == 7);
  CHECK(gcd_all(std::vector<std::int64_t>{6, 2, 4}) == 2);
  CHECK(gcd_all(std::vector<std::int64_t>{0, -9, 6}) == 3);
  CHECK_THROWS_AS(gcd_all(std::vector<std::int64_t>{0, 0}), InvalidArgument);
  CHECK(prime_factors(12) == std::vector<std::int64_t>{2, 3});
  CHECK(prime_factors(1).empty());
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), OverflowError);
}

TEST_CASE("full dimensionality: spec examples") {
  auto a = is_full_dimensional(sys(2, {{1, 0}, {0, 1}}));
  CHECK(a.full);
  CHECK(a.basis.size() == 2);
  CHECK(oracle_rank(a.basis) == 2);

  auto b = is_full_dimensional(sys(2, {{1, -1}, {-1, 1}}));
  CHECK_FALSE(b.full);
  REQUIRE(b.vanishing);
  CHECK((*b.vanishing == LinearForm({1, -1}) || *b.vanishing == LinearForm({-1, 1})));

  // 2x1 - x2 >= 0: integer box samples reach rank 2
  const auto s = sys(2, {{2, -1}});
  CHECK(is_full_dimensional(s).full);
  CHECK(oracle_rank(sample_solutions(s, 50)) == 2);
}

TEST_CASE("full dimensionality: certificates") {
  const auto s = sys(3, {{1, 0, 0}, {-1, 1, 0}, {0, -1, 0}});  // forces x1 = x2 = 0
  auto r = is_full_dimensional(s);
  CHECK_FALSE(r.full);
  REQUIRE(r.vanishing);
  for (const auto& x : sample_solutions(s, 200)) CHECK(r.vanishing->evaluate(x) == 0);

  auto z = is_full_dimensional(sys(3, {{0, 0, 0}}));
  CHECK(z.full);
  for (const auto& v : z.basis) CHECK(sys(3, {{0, 0, 0}}).satisfied_by(v));

  auto e = is_full_dimensional(sys(0, {}));
  CHECK(e.full);
  CHECK_THROWS_AS(is_full_dimensional(sys(2, {{1}})), DimensionMismatch);
}

TEST_CASE("feasibility with mixed signs") {
  std::vector<RationalVector> a{{Rational(1), Rational(1)}, {Rational(-1), Rational(0)}, {Rational(0), Rational(-1)}};
  CHECK_FALSE(find_feasible(a, {Rational(1), Rational(0), Rational(0)}, 2));
  auto x = find_feasible(a, {Rational(1), Rational(-1), Rational(-1)}, 2);
  REQUIRE(x);
  CHECK((*x)[0] + (*x)[1] >= 1);
  CHECK((*x)[0] <= 1);
  CHECK((*x)[1] <= 1);
}

TEST_CASE("sample_solutions") {
  auto all = sample_solutions(sys(1, {}), 3);
  CHECK(all.size() == 3);
  CHECK(all[0] != all[1]);
  CHECK(all[1] != all[2]);
  CHECK(all[0] != all[2]);

  auto pinned = sample_solutions(sys(1, {{1}, {-1}}), 10);
  REQUIRE(pinned.size() == 1);
  CHECK(pinned[0][0] == 0);

  const auto s = sys(2, {{1, -1}});
  auto pts = sample_solutions(s, 100);
  CHECK(pts.size() == 100);
  for (const auto& p : pts) CHECK(p[0] >= p[1]);
  CHECK(sample_solutions(s, 100) == pts);
}
