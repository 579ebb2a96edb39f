// Dense exact simplex, phase one only. Tableau entries are GMP rationals and
// pivoting follows Bland's rule, so cycling cannot occur.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "efdkit/errors.hpp"
#include "efdkit/geometry.hpp"

namespace efdkit {

namespace {

struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;  // structural columns, rhs kept separately
  std::vector<Rational> cell;
  std::vector<Rational> rhs;
  std::vector<Rational> cost;  // reduced costs
  Rational objective;          // current value of -(sum of artificials), maximized toward 0
  std::vector<std::size_t> basis;

  Rational& at(std::size_t r, std::size_t c) { return cell[r * cols + c]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c < cols; ++c) at(pr, c) *= inv;
    rhs[pr] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr) continue;
      const Rational f = at(r, pc);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (at(pr, c) != 0) at(r, c) -= f * at(pr, c);
      rhs[r] -= f * rhs[pr];
    }
    const Rational f = cost[pc];
    if (f != 0) {
      for (std::size_t c = 0; c < cols; ++c)
        if (at(pr, c) != 0) cost[c] -= f * at(pr, c);
      objective -= f * rhs[pr];
    }
    basis[pr] = pc;
  }
};

}  // namespace

std::optional<RationalVector> find_feasible(const std::vector<RationalVector>& a, const RationalVector& b,
                                            std::size_t n) {
  const std::size_t m = a.size();
  if (b.size() != m) throw DimensionMismatch("rhs length differs from row count");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionMismatch("constraint row has the wrong length");
  if (m == 0) return RationalVector(n, Rational(0));

  // columns: x+ (n) | x- (n) | slack (m) | artificial (one per row with b > 0)
  std::vector<std::size_t> art_row;
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] > 0) art_row.push_back(i);
  Tableau t;
  t.rows = m;
  t.cols = 2 * n + m + art_row.size();
  t.cell.assign(t.rows * t.cols, Rational(0));
  t.rhs.assign(m, Rational(0));
  t.cost.assign(t.cols, Rational(0));
  t.basis.assign(m, 0);

  std::size_t next_art = 2 * n + m;
  for (std::size_t i = 0; i < m; ++i) {
    // a.x+ - a.x- - s = b, flipped when b <= 0 so the slack can start basic
    const bool flip = b[i] <= 0;
    const int sgn = flip ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = sgn * a[i][j];
      t.at(i, n + j) = -sgn * a[i][j];
    }
    t.at(i, 2 * n + i) = -sgn;
    t.rhs[i] = sgn * b[i];
    if (flip) {
      t.basis[i] = 2 * n + i;
    } else {
      t.at(i, next_art) = 1;
      t.basis[i] = next_art++;
    }
  }
  // minimize the artificial sum; reduced costs start as -(sum of artificial rows)
  for (auto i : art_row) {
    for (std::size_t c = 0; c < 2 * n + m; ++c) t.cost[c] -= t.at(i, c);
    t.objective -= t.rhs[i];
  }

  for (;;) {
    std::size_t enter = t.cols;
    for (std::size_t c = 0; c < t.cols; ++c) {
      if (t.cost[c] < 0) {
        enter = c;
        break;
      }
    }
    if (enter == t.cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      const Rational& v = t.at(r, enter);
      if (v <= 0) continue;
      const Rational ratio = t.rhs[r] / v;
      if (leave == m || ratio < best || (ratio == best && t.basis[r] < t.basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one; stop defensively
    t.pivot(leave, enter);
  }
  if (t.objective != 0) return std::nullopt;

  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r) {
    const auto c = t.basis[r];
    if (c < n) x[c] += t.rhs[r];
    else if (c < 2 * n) x[c - n] -= t.rhs[r];
  }
  return x;
}

namespace {

std::vector<RationalVector> as_rows(const std::vector<LinearForm>& forms) {
  std::vector<RationalVector> out;
  out.reserve(forms.size());
  for (const auto& f : forms) {
    RationalVector r;
    r.reserve(f.dim());
    for (auto c : f.coeffs) r.emplace_back(static_cast<long>(c));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

FullDimResult is_full_dimensional(const IneqSystem& s) {
  s.validate();
  const std::size_t n = s.n;
  std::vector<LinearForm> live;
  for (const auto& r : s.rows)
    if (!r.is_zero()) live.push_back(r);

  FullDimResult res;
  const auto rows = as_rows(live);
  // A homogeneous cone is full-dimensional iff some point satisfies every nonzero row strictly.
  auto interior = find_feasible(rows, RationalVector(rows.size(), Rational(1)), n);
  if (interior) {
    res.full = true;
    std::int64_t amax = 0;
    for (const auto& r : live)
      for (auto c : r.coeffs) amax = std::max(amax, c < 0 ? -c : c);
    const Rational eps(1, amax + 1);
    std::vector<RationalVector> cands{*interior};
    for (std::size_t j = 0; j < n; ++j) {
      auto v = *interior;
      v[j] += eps;
      cands.push_back(std::move(v));
    }
    for (auto& c : cands) {
      if (res.basis.size() == n) break;
      auto trial = res.basis;
      trial.push_back(c);
      if (rank_of(trial) == trial.size()) res.basis = std::move(trial);
    }
    if (res.basis.size() != n) throw Error("internal: basis extraction fell short");
    return res;
  }

  for (std::size_t i = 0; i < live.size(); ++i) {
    RationalVector b(rows.size(), Rational(0));
    b[i] = 1;
    if (!find_feasible(rows, b, n)) {
      res.vanishing = live[i].primitive();
      return res;
    }
  }
  throw Error("internal: no interior point but no implicit equality either");
}

std::vector<RationalVector> sample_solutions(const IneqSystem& s, std::size_t budget, std::uint64_t seed) {
  s.validate();
  std::vector<RationalVector> out;
  if (budget == 0) return out;
  const std::size_t n = s.n;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::mt19937_64 rng(seed);
  std::set<std::vector<std::int64_t>> seen;
  auto consider = [&](const std::vector<std::int64_t>& p) {
    if (out.size() >= budget || seen.count(p)) return;
    RationalVector x;
    x.reserve(n);
    for (auto v : p) x.emplace_back(static_cast<long>(v));
    if (!s.satisfied_by(x)) return;
    seen.insert(p);
    out.push_back(std::move(x));
  };

  constexpr std::int64_t kMaxRadius = 64;
  constexpr std::size_t kEnumerateLimit = 4096;
  for (std::int64_t r = 1; r <= kMaxRadius && out.size() < budget; r *= 2) {
    const std::int64_t side = 2 * r + 1;
    double box = 1;
    for (std::size_t i = 0; i < n; ++i) box *= static_cast<double>(side);
    if (box <= kEnumerateLimit) {
      std::vector<std::vector<std::int64_t>> pts;
      std::vector<std::int64_t> p(n, -r);
      for (;;) {
        pts.push_back(p);
        std::size_t i = 0;
        while (i < n && p[i] == r) p[i++] = -r;
        if (i == n) break;
        ++p[i];
      }
      std::shuffle(pts.begin(), pts.end(), rng);
      for (const auto& q : pts) consider(q);
    } else {
      std::uniform_int_distribution<std::int64_t> coord(-r, r);
      const std::size_t draws = std::max<std::size_t>(4 * budget, 2000);
      std::vector<std::int64_t> p(n);
      for (std::size_t d = 0; d < draws && out.size() < budget; ++d) {
        for (auto& v : p) v = coord(rng);
        consider(p);
      }
    }
  }
  return out;
}

}  // namespace efdkit
