// Solution counting for EFD-sentences at fixed x-values.
//
// With one z-variable ranging over a line {base + s*dir}, every term is a
// piecewise affine function of s. Evaluating on affine tuples and recording
// the roots of every comparison splits the line into cells on which all
// comparisons are fixed; inside a cell each equation is affine and solved
// directly, and the breakpoints themselves are checked concretely.

#include <algorithm>
#include <deque>
#include <set>

#include "evaluator.hpp"

namespace efdkit {

namespace {

struct Aff {
  Rational a;  // constant part
  Rational b;  // coefficient of s
};
using AffTuple = std::vector<Aff>;

struct Cell {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  bool inside(const Rational& r) const { return (!lo || r > *lo) && (!hi || r < *hi); }
  Rational probe() const {
    if (lo && hi) return (*lo + *hi) / 2;
    if (lo) return *lo + 1;
    if (hi) return *hi - 1;
    return Rational(0);
  }
};

struct AffineOps {
  using Value = AffTuple;
  const Cell* cell = nullptr;
  Rational probe;
  std::set<Rational>* breaks = nullptr;

  Value constant(const Element& e) {
    Value v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = Aff{e[i], Rational(0)};
    return v;
  }
  Value add(Value x, const Value& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i].a += y[i].a;
      x[i].b += y[i].b;
    }
    return x;
  }
  Value neg(Value x) {
    for (auto& c : x) {
      c.a = -c.a;
      c.b = -c.b;
    }
    return x;
  }
  Value scale(std::int64_t k, Value x) {
    const Rational q(static_cast<long>(k));
    for (auto& c : x) {
      c.a *= q;
      c.b *= q;
    }
    return x;
  }
  // Sign of x - y at the probe; roots inside the cell are recorded.
  int compare(const Value& x, const Value& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const Rational a = x[i].a - y[i].a;
      const Rational b = x[i].b - y[i].b;
      if (a == 0 && b == 0) continue;
      if (b != 0) {
        const Rational r = -a / b;
        if (cell->inside(r)) breaks->insert(r);
      }
      const Rational v = a + b * probe;
      return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    return 0;
  }
  Value max(Value x, Value y) { return compare(x, y) >= 0 ? x : y; }
  Value min(Value x, Value y) { return compare(x, y) <= 0 ? x : y; }
};

struct Line {
  Element base;
  Element dir;
  Cell domain;  // closed at finite ends
};

class Collector {
 public:
  explicit Collector(std::size_t m) : m_(m) {}
  void add(std::vector<Element> z) {
    if (count_ >= 2) return;
    if (std::find(sols_.begin(), sols_.end(), z) != sols_.end()) return;
    sols_.push_back(std::move(z));
    ++count_;
  }
  void saturate() { count_ = 2; }
  int count() const { return count_; }
  std::vector<std::vector<Element>> take() { return std::move(sols_); }
  std::size_t m() const { return m_; }

 private:
  std::size_t m_;
  int count_ = 0;
  std::vector<std::vector<Element>> sols_;
};

bool satisfies(const Algebra& a, const EFDSentence& phi, const Assignment& env) {
  for (const auto& eq : phi.equations)
    if (!holds(a, eq, env)) return false;
  return true;
}

Assignment x_env(const std::vector<Element>& xs) {
  Assignment env;
  for (std::size_t i = 0; i < xs.size(); ++i) env[Variable{VarKind::X, static_cast<int>(i + 1)}] = xs[i];
  return env;
}

Element along(const Line& l, const Rational& s) {
  Element e = l.base;
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += s * l.dir[i];
  return e;
}

// Two universe points strictly inside a nonempty open interval of the line.
std::vector<Rational> interior_points(const Cell& c, std::int64_t prime) {
  std::vector<Rational> out;
  if (!c.lo || !c.hi) {
    const Rational anchor = c.lo ? *c.lo : (c.hi ? *c.hi : Rational(0));
    mpz_class f = anchor.get_num() / anchor.get_den();  // truncation
    for (int step = -3; step <= 3 && out.size() < 2; ++step) {
      const Rational cand(mpz_class(f + step));
      if (c.inside(cand)) out.push_back(cand);
    }
    for (int step = 4; out.size() < 2 && step < 1000; ++step) {
      const Rational cand(mpz_class(c.lo ? mpz_class(f + step) : mpz_class(f - step)));
      if (c.inside(cand)) out.push_back(cand);
    }
    return out;
  }
  mpz_class scale = 1;
  for (int e = 0; e < 200 && out.size() < 2; ++e) {
    const Rational lo = *c.lo * scale;
    mpz_class k = lo.get_num() / lo.get_den();
    for (int step = 0; step < 4 && out.size() < 2; ++step) {
      const Rational cand = Rational(mpz_class(k + step)) / Rational(scale);
      if (c.inside(cand) && std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
    }
    scale *= prime;
  }
  return out;
}

bool solve_line(const Algebra& a, const EFDSentence& phi, const Assignment& env, const Line& line, bool integral,
                std::int64_t density_prime, Collector& out) {
  const Variable zv{VarKind::Z, 1};
  std::set<Rational> points;
  if (line.domain.lo) points.insert(*line.domain.lo);
  if (line.domain.hi) points.insert(*line.domain.hi);
  std::vector<Cell> solution_cells;
  std::deque<Cell> work{line.domain};
  std::size_t visited = 0;

  while (!work.empty()) {
    if (++visited > 20000) return false;
    const Cell cell = work.front();
    work.pop_front();
    std::set<Rational> breaks;
    AffineOps ops;
    ops.cell = &cell;
    ops.probe = cell.probe();
    ops.breaks = &breaks;
    auto leaf = [&](const Variable& v) -> AffTuple {
      if (v == zv) {
        AffTuple t(line.base.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = Aff{line.base[i], line.dir[i]};
        return t;
      }
      auto it = env.find(v);
      if (it == env.end()) throw InvalidArgument("unbound variable " + variable_name(v));
      return ops.constant(it->second);
    };
    std::vector<AffTuple> diffs;
    for (const auto& eq : phi.equations) {
      auto l = detail::evaluate(a, eq.lhs, ops, leaf);
      auto r = detail::evaluate(a, eq.rhs, ops, leaf);
      diffs.push_back(ops.add(std::move(l), ops.neg(std::move(r))));
    }
    if (!breaks.empty()) {
      std::optional<Rational> lo = cell.lo;
      for (const auto& b : breaks) {
        points.insert(b);
        work.push_back(Cell{lo, b});
        lo = b;
      }
      work.push_back(Cell{lo, cell.hi});
      continue;
    }
    // affine on the whole cell
    bool whole = true;
    std::optional<Rational> point;
    bool empty = false;
    for (const auto& d : diffs) {
      for (const auto& c : d) {
        if (c.b == 0) {
          if (c.a != 0) empty = true;
        } else {
          const Rational r = -c.a / c.b;
          if (point && *point != r) empty = true;
          point = r;
          whole = false;
        }
      }
    }
    if (empty) continue;
    if (whole) {
      solution_cells.push_back(cell);
    } else if (cell.inside(*point)) {
      points.insert(*point);
    }
  }

  auto try_point = [&](const Rational& s) {
    const Element z = along(line, s);
    if (!a.contains(z)) return;
    Assignment e = env;
    e[zv] = z;
    if (satisfies(a, phi, e)) out.add({z});
  };
  for (const auto& p : points) try_point(p);
  for (const auto& c : solution_cells) {
    if (out.count() >= 2) break;
    if (integral) {
      // integers strictly inside
      if (!c.lo || !c.hi) {
        out.saturate();
        break;
      }
      mpz_class k = c.lo->get_num() / c.lo->get_den();
      for (int step = -1; step < 4; ++step) {
        const Rational cand(mpz_class(k + step));
        if (c.inside(cand)) try_point(cand);
      }
    } else {
      for (const auto& s : interior_points(c, density_prime)) try_point(s);
      out.saturate();
    }
  }
  return true;
}

std::vector<Element> candidate_pool(const Algebra& a, const std::vector<Element>& xs) {
  std::vector<Element> pool = structured_elements(a);
  auto push = [&](const Element& e) {
    if (a.contains(e) && std::find(pool.begin(), pool.end(), e) == pool.end()) pool.push_back(e);
  };
  for (const auto& x : xs) {
    push(x);
    for (long k = 2; k <= 5; ++k) {
      Element d = x;
      for (auto& c : d) c /= Rational(k);
      push(d);
      Element m = x;
      for (auto& c : m) c *= Rational(k);
      push(m);
    }
    Element n = x;
    for (auto& c : n) c = -c;
    push(n);
    if (a.species() == Signature::MV) {
      Element u = a.unit();
      for (std::size_t i = 0; i < u.size(); ++i) u[i] -= x[i];
      push(u);
    }
  }
  std::mt19937_64 rng(kDefaultSeed);
  for (int i = 0; i < 16; ++i) push(random_element(a, rng));
  return pool;
}

void search_candidates(const Algebra& a, const EFDSentence& phi, const Assignment& env,
                       const std::vector<Element>& pool, Collector& out) {
  const std::size_t m = static_cast<std::size_t>(phi.m);
  double total = 1;
  for (std::size_t j = 0; j < m; ++j) total *= static_cast<double>(pool.size());
  constexpr double kCap = 20000;
  auto test = [&](const std::vector<std::size_t>& idx) {
    Assignment e = env;
    std::vector<Element> z;
    for (std::size_t j = 0; j < m; ++j) {
      e[Variable{VarKind::Z, static_cast<int>(j + 1)}] = pool[idx[j]];
      z.push_back(pool[idx[j]]);
    }
    if (satisfies(a, phi, e)) out.add(std::move(z));
  };
  std::vector<std::size_t> idx(m, 0);
  if (total <= kCap) {
    for (;;) {
      test(idx);
      if (out.count() >= 2) return;
      std::size_t j = 0;
      while (j < m && ++idx[j] == pool.size()) idx[j++] = 0;
      if (j == m) return;
    }
  }
  std::mt19937_64 rng(kDefaultSeed + 1);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (std::size_t it = 0; it < static_cast<std::size_t>(kCap) && out.count() < 2; ++it) {
    for (auto& v : idx) v = pick(rng);
    test(idx);
  }
}

bool width_one_group(const Algebra& g) {
  return g.kind() == Algebra::Kind::Integer || g.kind() == Algebra::Kind::Rational ||
         g.kind() == Algebra::Kind::Localized;
}

bool integral_group(const Algebra& g) {
  return g.kind() == Algebra::Kind::Integer || (g.kind() == Algebra::Kind::Localized && g.primes().empty());
}

std::int64_t density_prime(const Algebra& g) {
  return g.kind() == Algebra::Kind::Localized && !g.primes().empty() ? g.primes().front() : 2;
}

}  // namespace

SolveResult solve_at(const Algebra& a, const EFDSentence& phi, const std::vector<Element>& xs) {
  phi.validate();
  if (xs.size() != static_cast<std::size_t>(phi.n))
    throw DimensionMismatch("expected " + std::to_string(phi.n) + " x-values");
  for (const auto& x : xs) a.require_contains(x);
  const Assignment env = x_env(xs);
  Collector col(static_cast<std::size_t>(phi.m));
  SolveResult res;
  const auto k = a.kind();

  if (k == Algebra::Kind::Trivial) {
    Assignment e = env;
    for (int j = 1; j <= phi.m; ++j) e[Variable{VarKind::Z, j}] = Element{};
    if (satisfies(a, phi, e)) col.add(std::vector<Element>(phi.m));
  } else if (k == Algebra::Kind::Two && phi.m <= 20) {
    for (std::uint32_t bits = 0; bits < (1u << phi.m) && col.count() < 2; ++bits) {
      Assignment e = env;
      std::vector<Element> z;
      for (int j = 0; j < phi.m; ++j) {
        Element v{Rational((bits >> j) & 1u)};
        e[Variable{VarKind::Z, j + 1}] = v;
        z.push_back(v);
      }
      if (satisfies(a, phi, e)) col.add(std::move(z));
    }
  } else {
    std::vector<Line> lines;
    bool integral = false;
    std::int64_t prime = 2;
    if (phi.m == 1) {
      if (a.is_group() && width_one_group(a)) {
        lines.push_back(Line{{Rational(0)}, {Rational(1)}, Cell{}});
        integral = integral_group(a);
        prime = density_prime(a);
      } else if (k == Algebra::Kind::PositiveCone && width_one_group(a.inner())) {
        lines.push_back(Line{{Rational(0)}, {Rational(1)}, Cell{Rational(0), std::nullopt}});
        integral = integral_group(a.inner());
        prime = density_prime(a.inner());
      } else if (k == Algebra::Kind::Gamma && width_one_group(a.inner())) {
        lines.push_back(Line{{Rational(0), Rational(0)}, {Rational(0), Rational(1)}, Cell{Rational(0), std::nullopt}});
        lines.push_back(Line{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, Cell{std::nullopt, Rational(0)}});
        integral = integral_group(a.inner());
        prime = density_prime(a.inner());
      }
    }
    bool exact = !lines.empty();
    for (const auto& l : lines) {
      if (!solve_line(a, phi, env, l, integral, prime, col)) {
        exact = false;
        break;
      }
    }
    if (!exact) {
      res.exact = false;
      col = Collector(static_cast<std::size_t>(phi.m));
      search_candidates(a, phi, env, candidate_pool(a, xs), col);
    }
  }
  res.count = col.count();
  res.solutions = col.take();
  return res;
}

namespace {

// Deterministic x-tuples: exhaustive for 2 and trivial algebras, else
// structured tuples followed by random ones.
std::vector<std::vector<Element>> sample_points(const Algebra& a, int n, std::size_t budget, std::uint64_t seed,
                                                bool& exhaustive) {
  std::vector<std::vector<Element>> out;
  exhaustive = false;
  if (n == 0) {
    out.emplace_back();
    exhaustive = true;
    return out;
  }
  if (a.kind() == Algebra::Kind::Trivial) {
    out.emplace_back(static_cast<std::size_t>(n), Element{});
    exhaustive = true;
    return out;
  }
  if (a.kind() == Algebra::Kind::Two && n <= 16) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::vector<Element> xs;
      for (int i = 0; i < n; ++i) xs.push_back(Element{Rational((bits >> i) & 1u)});
      out.push_back(std::move(xs));
    }
    exhaustive = true;
    return out;
  }
  const auto st = structured_elements(a);
  if (n == 1) {
    for (const auto& e : st)
      if (out.size() < budget) out.push_back({e});
  } else {
    for (std::size_t i = 0; i < st.size() && out.size() < std::min<std::size_t>(budget, 16); ++i)
      for (std::size_t j = 0; j < st.size() && out.size() < std::min<std::size_t>(budget, 16); ++j) {
        std::vector<Element> xs(static_cast<std::size_t>(n), st[i]);
        xs.back() = st[j];
        out.push_back(std::move(xs));
      }
  }
  std::mt19937_64 rng(seed);
  while (out.size() < budget) {
    std::vector<Element> xs;
    for (int i = 0; i < n; ++i) xs.push_back(random_element(a, rng));
    out.push_back(std::move(xs));
  }
  return out;
}

Verdict run_check(const Algebra& a, const EFDSentence& phi, std::size_t budget, std::uint64_t seed,
                  bool need_existence) {
  phi.validate();
  Verdict v;
  bool exhaustive = false;
  const auto pts = sample_points(a, phi.n, budget, seed, exhaustive);
  bool all_exact = true;
  bool unresolved = false;
  for (const auto& xs : pts) {
    ++v.samples;
    const auto r = solve_at(a, phi, xs);
    all_exact = all_exact && r.exact;
    if (r.count >= 2 || (need_existence && r.count == 0)) {
      if (r.count == 0 && !r.exact) {
        unresolved = true;
        continue;
      }
      v.status = Verdict::Status::Falsified;
      v.reason = r.count == 0 ? "no-solution" : "non-unique";
      v.witness = x_env(xs);
      for (const auto& sol : r.solutions)
        for (const auto& z : sol) v.solutions.push_back(z);
      v.confidence = r.exact ? "exact" : "sampled";
      return v;
    }
  }
  if (unresolved) v.status = Verdict::Status::Inconclusive;
  v.confidence = all_exact ? "exact" : "sampled";
  v.exhaustive = exhaustive;
  return v;
}

}  // namespace

Verdict check_sentence_sampled(const Algebra& a, const EFDSentence& phi, std::size_t budget, std::uint64_t seed) {
  return run_check(a, phi, budget, seed, true);
}

Verdict check_uniqueness_sampled(const Algebra& a, const EFDSentence& phi, std::size_t budget, std::uint64_t seed) {
  return run_check(a, phi, budget, seed, false);
}

Verdict check_identity_sampled(const Algebra& a, const Identity& id, std::size_t budget, std::uint64_t seed) {
  id.validate();
  Verdict v;
  bool exhaustive = false;
  for (const auto& xs : sample_points(a, id.n, budget, seed, exhaustive)) {
    ++v.samples;
    const auto env = x_env(xs);
    if (!holds(a, id.equation, env)) {
      v.status = Verdict::Status::Falsified;
      v.reason = "identity-fails";
      v.witness = env;
      v.confidence = "exact";
      return v;
    }
  }
  v.confidence = exhaustive ? "exact" : "sampled";
  v.exhaustive = exhaustive;
  return v;
}

}  // namespace efdkit
