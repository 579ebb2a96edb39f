#include <algorithm>
#include <numeric>

#include "efdkit/errors.hpp"
#include "efdkit/geometry.hpp"

namespace efdkit {

LinearForm LinearForm::unit(std::size_t n, std::size_t i) {
  if (i >= n) throw DimensionMismatch("unit form index out of range");
  LinearForm f = zero(n);
  f.coeffs[i] = 1;
  return f;
}

bool LinearForm::is_zero() const noexcept {
  return std::all_of(coeffs.begin(), coeffs.end(), [](auto c) { return c == 0; });
}

Rational LinearForm::evaluate(const RationalVector& x) const {
  if (x.size() != coeffs.size()) throw DimensionMismatch("point and form differ in dimension");
  Rational acc = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) acc += Rational(static_cast<long>(coeffs[i])) * x[i];
  return acc;
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("adding forms of different dimension");
  LinearForm r = *this;
  for (std::size_t i = 0; i < dim(); ++i) r.coeffs[i] = checked_add(r.coeffs[i], o.coeffs[i]);
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator-() const { return scaled(-1); }

LinearForm LinearForm::scaled(std::int64_t k) const {
  LinearForm r = *this;
  for (auto& c : r.coeffs) c = checked_mul(c, k);
  return r;
}

LinearForm LinearForm::primitive() const {
  if (is_zero()) return *this;
  const auto g = gcd_all(coeffs);
  LinearForm r = *this;
  for (auto& c : r.coeffs) c /= g;
  return r;
}

std::string to_string(const LinearForm& f) {
  std::string out = "(";
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(f.coeffs[i]);
  }
  return out + ")";
}

void IneqSystem::validate() const {
  for (const auto& r : rows)
    if (r.dim() != n)
      throw DimensionMismatch("row of length " + std::to_string(r.dim()) + " in a system of dimension " +
                              std::to_string(n));
}

bool IneqSystem::satisfied_by(const RationalVector& x) const {
  if (x.size() != n) throw DimensionMismatch("point has the wrong dimension");
  return std::all_of(rows.begin(), rows.end(), [&](const LinearForm& r) { return r.evaluate(x) >= 0; });
}

std::size_t rank_of(const std::vector<RationalVector>& vs) {
  if (vs.empty()) return 0;
  std::vector<RationalVector> m = vs;
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace efdkit
