#include "efdkit/lattice.hpp"

#include <functional>

#include "efdkit/errors.hpp"
#include "efdkit/syntax.hpp"

namespace efdkit {

namespace {

int rank(const AEClass& c) {
  switch (c.kind) {
    case AEClass::Kind::Trivial: return 0;
    case AEClass::Kind::Boolean: return 1;
    case AEClass::Kind::Divisible: return 2;
  }
  return 2;
}

void same_family(const AEClass& a, const AEClass& b) {
  a.validate();
  b.validate();
  if (a.family != b.family) {
    throw FamilyMismatch("cannot compare a " + to_string(a.family) + " class with a " + to_string(b.family) + " class");
  }
}

}  // namespace

bool includes(const AEClass& c1, const AEClass& c2) {
  same_family(c1, c2);
  const int r1 = rank(c1), r2 = rank(c2);
  if (r1 != r2) return r1 < r2;
  if (c1.kind != AEClass::Kind::Divisible) return true;
  return c2.primes.subset_of(c1.primes);
}

AEClass meet(const AEClass& c1, const AEClass& c2) {
  same_family(c1, c2);
  if (rank(c1) != rank(c2)) return rank(c1) < rank(c2) ? c1 : c2;
  if (c1.kind != AEClass::Kind::Divisible) return c1;
  return AEClass::divisible(c1.family, c1.primes.unite(c2.primes));
}

AEClass join(const AEClass& c1, const AEClass& c2) {
  same_family(c1, c2);
  if (rank(c1) != rank(c2)) return rank(c1) > rank(c2) ? c1 : c2;
  if (c1.kind != AEClass::Kind::Divisible) return c1;
  return AEClass::divisible(c1.family, c1.primes.intersect(c2.primes));
}

std::string to_string(LogicExpansion::Base b) { return b == LogicExpansion::Base::Bal ? "Bal" : "LP"; }

void LogicExpansion::validate() const {
  if (special == Special::Classical && base != Base::LP) throw InvalidArgument("Classical is an expansion of LP only");
}

std::string LogicExpansion::to_string() const {
  switch (special) {
    case Special::Inconsistent: return efdkit::to_string(base) + "^inconsistent";
    case Special::Classical: return "Classical";
    case Special::None: break;
  }
  return efdkit::to_string(base) + "^" + primes.to_string();
}

AEClass class_of(const LogicExpansion& e) {
  e.validate();
  const Family f = e.base == LogicExpansion::Base::Bal ? Family::G : Family::P;
  switch (e.special) {
    case LogicExpansion::Special::Inconsistent: return AEClass::trivial(f);
    case LogicExpansion::Special::Classical: return AEClass::boolean();
    case LogicExpansion::Special::None: break;
  }
  return AEClass::divisible(f, e.primes);
}

std::string to_string(ExpansionOrder o) {
  switch (o) {
    case ExpansionOrder::MorphismExists: return "morphism-exists";
    case ExpansionOrder::ReverseMorphismExists: return "reverse-morphism-exists";
    case ExpansionOrder::Equipollent: return "equipollent";
    case ExpansionOrder::Incomparable: return "incomparable";
  }
  return "?";
}

ExpansionOrder expansion_order(const LogicExpansion& e1, const LogicExpansion& e2) {
  if (e1.base != e2.base) throw FamilyMismatch("expansions of different base logics");
  const AEClass c1 = class_of(e1), c2 = class_of(e2);
  const bool forward = includes(c2, c1);
  const bool backward = includes(c1, c2);
  if (forward && backward) return ExpansionOrder::Equipollent;
  if (forward) return ExpansionOrder::MorphismExists;
  if (backward) return ExpansionOrder::ReverseMorphismExists;
  return ExpansionOrder::Incomparable;
}

std::vector<AxiomSchema> emit_axioms(const LogicExpansion& e) {
  e.validate();
  if (e.special != LogicExpansion::Special::None) throw InvalidArgument(e.to_string() + " has no prime axiom list");
  if (!e.primes.is_finite()) throw InvalidArgument("a cofinite prime set has no finite axiom list");
  std::vector<AxiomSchema> out;
  for (const auto p : e.primes.listed()) {
    const std::string d = "d" + std::to_string(p);
    const VariableNamer namer = [&](const Variable& v) { return v.kind == VarKind::Z ? d + "(x)" : std::string("x"); };
    AxiomSchema a;
    a.fresh_symbols = {d};
    if (e.base == LogicExpansion::Base::Bal) {
      a.name = "A_" + std::to_string(p);
      a.body = Term::scalar(p, Term::z(1));
      a.formula = "x -> " + print_term(a.body, namer);
      a.note = "the uniqueness rule for " + d + " is derivable in Bal";
    } else {
      a.name = "D_" + std::to_string(p);
      a.body = build_t_k(p);
      a.formula = "(" + print_term(a.body, namer) + ") <-> x";
      a.note = "the uniqueness rule for " + d + " is derivable in LP";
    }
    out.push_back(std::move(a));
  }
  return out;
}

BaseLogicMetadata base_metadata(LogicExpansion::Base b) {
  if (b == LogicExpansion::Base::Bal) return {"Delta(x, y) = {x -> y}", "E(x) = {x = 0}"};
  return {"Delta(x, y) = {x <-> y}", "E(x) = {x = ~0}"};
}

bool FinitePoset::is_partial_order() const {
  const std::size_t n = size();
  if (leq.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n || !leq[i][i]) return false;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[i][j] && leq[j][k] && !leq[i][k]) return false;
      }
    }
  }
  return true;
}

FinitePoset chain_poset(std::size_t k) {
  FinitePoset p;
  for (std::size_t i = 0; i < k; ++i) p.labels.push_back("c" + std::to_string(i));
  p.leq.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) p.leq[i][j] = true;
  return p;
}

FinitePoset boolean_cube(std::size_t k) {
  FinitePoset p;
  const std::size_t n = std::size_t{1} << k;
  for (std::size_t s = 0; s < n; ++s) p.labels.push_back("s" + std::to_string(s));
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p.leq[a][b] = (a & b) == a;
  return p;
}

FinitePoset ordinal_sum(const FinitePoset& lower, const FinitePoset& upper) {
  FinitePoset p;
  const std::size_t a = lower.size(), n = a + upper.size();
  p.labels = lower.labels;
  p.labels.insert(p.labels.end(), upper.labels.begin(), upper.labels.end());
  p.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i < a && j < a) p.leq[i][j] = lower.leq[i][j];
      else if (i >= a && j >= a) p.leq[i][j] = upper.leq[i - a][j - a];
      else p.leq[i][j] = i < a;
    }
  }
  return p;
}

FinitePoset dual(const FinitePoset& p) {
  FinitePoset d = p;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) d.leq[i][j] = p.leq[j][i];
  return d;
}

bool is_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  auto profile = [](const FinitePoset& p, std::size_t i) {
    std::size_t up = 0, down = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
      up += p.leq[i][j];
      down += p.leq[j][i];
    }
    return std::pair{up, down};
  };
  std::vector<std::size_t> map(n);
  std::vector<bool> taken(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (taken[j] || profile(a, i) != profile(b, j)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = a.leq[i][k] == b.leq[j][map[k]] && a.leq[k][i] == b.leq[map[k]][j];
      }
      if (!ok) continue;
      taken[j] = true;
      map[i] = j;
      if (place(i + 1)) return true;
      taken[j] = false;
    }
    return false;
  };
  return place(0);
}

std::vector<PrimeSet> all_subsets(const std::vector<std::int64_t>& primes) {
  std::vector<PrimeSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
    std::vector<std::int64_t> s;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (mask >> i & 1) s.push_back(primes[i]);
    out.push_back(PrimeSet::finite(s));
  }
  return out;
}

FinitePoset class_poset(Family f, const std::vector<std::int64_t>& primes) {
  std::vector<AEClass> elems{AEClass::trivial(f)};
  if (f == Family::P) elems.push_back(AEClass::boolean());
  for (const auto& s : all_subsets(primes)) elems.push_back(AEClass::divisible(f, s));
  FinitePoset p;
  for (const auto& c : elems) p.labels.push_back(c.to_string());
  p.leq.assign(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) p.leq[i][j] = includes(elems[i], elems[j]);
  return p;
}

FinitePoset expansion_poset(LogicExpansion::Base b, const std::vector<std::int64_t>& primes) {
  std::vector<LogicExpansion> elems;
  for (const auto& s : all_subsets(primes)) elems.push_back({b, s, LogicExpansion::Special::None});
  if (b == LogicExpansion::Base::LP) elems.push_back({b, {}, LogicExpansion::Special::Classical});
  elems.push_back({b, {}, LogicExpansion::Special::Inconsistent});
  FinitePoset p;
  for (const auto& e : elems) p.labels.push_back(e.to_string());
  p.leq.assign(elems.size(), std::vector<bool>(elems.size(), false));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const auto o = expansion_order(elems[i], elems[j]);
      p.leq[i][j] = o == ExpansionOrder::MorphismExists || o == ExpansionOrder::Equipollent;
    }
  }
  return p;
}

}  // namespace efdkit
