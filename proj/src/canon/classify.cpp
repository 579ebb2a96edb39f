#include <numeric>

#include "efdkit/canonical.hpp"
#include "efdkit/errors.hpp"
#include "efdkit/syntax.hpp"

namespace efdkit {

namespace {

// k for `k z_j` or bare `z_j`, 0 otherwise.
std::int64_t z_multiplier(const Term& t, int j) {
  if (t.op() == Op::Var) return t.variable() == Variable{VarKind::Z, j} ? 1 : 0;
  if (t.op() == Op::Scalar && t.operand().op() == Op::Var && t.operand().variable() == Variable{VarKind::Z, j}) {
    return t.coefficient();
  }
  return 0;
}

struct Definition {
  std::int64_t k;
  Term t;
};

// Finds `k z_j = t(x)` in either orientation; normalizes k > 0.
std::optional<Definition> definition_of(const Equation& eq, int j) {
  for (int side = 0; side < 2; ++side) {
    const Term& zs = side == 0 ? eq.lhs : eq.rhs;
    const Term& other = side == 0 ? eq.rhs : eq.lhs;
    const auto k = z_multiplier(zs, j);
    if (k == 0 || mentions_kind(other, VarKind::Z)) continue;
    if (k < 0) return Definition{checked_neg(k), Term::neg(other)};
    return Definition{k, other};
  }
  return std::nullopt;
}

}  // namespace

void DeltaKT::validate() const {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (mentions_kind(t, VarKind::Z)) throw InvalidArgument("t must not mention z-variables");
  require_admits(Signature::Group, t);
}

EFDSentence DeltaKT::sentence() const {
  validate();
  EFDSentence s;
  s.signature = Signature::Group;
  s.n = std::max(1, max_index(t, VarKind::X));
  s.m = 1;
  s.equations.push_back({Term::scalar(k, Term::z(1)), t});
  return s;
}

std::optional<DeltaKT> as_delta_kt(const EFDSentence& phi) {
  if (phi.signature != Signature::Group || phi.m != 1 || phi.equations.size() != 1) return std::nullopt;
  const auto def = definition_of(phi.equations[0], 1);
  if (!def) return std::nullopt;
  return DeltaKT{def->k, def->t};
}

std::int64_t reduce_delta_kt(const DeltaKT& d, std::size_t cap) {
  d.validate();
  const auto pl = piecewise_canonical(d.t, cap);
  std::vector<std::int64_t> values{d.k};
  for (const auto& piece : pl.pieces) values.insert(values.end(), piece.form.coeffs.begin(), piece.form.coeffs.end());
  return d.k / gcd_all(values);
}

bool is_group_identity(const Term& lhs, const Term& rhs, std::size_t cap) {
  const Term diff = Term::plus(lhs, Term::neg(rhs));
  const auto ln = distribute_to_lattice_normal(diff);
  bool all_zero = true;
  for (const auto& f : ln.forms) all_zero = all_zero && f.is_zero();
  if (all_zero) return true;
  const auto pl = piecewise_canonical(ln, cap);
  for (const auto& piece : pl.pieces) {
    if (!piece.form.is_zero()) return false;
  }
  return true;
}

GroupClassification classify_group_sentences_detailed(const std::vector<EFDSentence>& sentences, std::size_t cap) {
  GroupClassification out;
  PrimeSet primes;
  bool trivial = false;
  for (const auto& phi : sentences) {
    phi.validate();
    if (phi.signature != Signature::Group) {
      throw FragmentError("only l-group sentences can be classified here; translate " + std::string(to_string(phi.signature)) +
                          " sentences first");
    }
    std::vector<Definition> defs;
    std::vector<bool> used(phi.equations.size(), false);
    for (int j = 1; j <= phi.m; ++j) {
      std::optional<Definition> found;
      for (std::size_t e = 0; e < phi.equations.size() && !found; ++e) {
        if (used[e]) continue;
        found = definition_of(phi.equations[e], j);
        if (found) used[e] = true;
      }
      if (!found) {
        throw FragmentError("z" + std::to_string(j) + " has no defining equation k z" + std::to_string(j) +
                            " = t(x) in: " + print_sentence(phi));
      }
      defs.push_back(*found);
    }
    std::int64_t big_k = 1;
    for (const auto& d : defs) {
      const auto kp = reduce_delta_kt(DeltaKT{d.k, d.t}, cap);
      out.k_primes.push_back(kp);
      primes = primes.unite(PrimeSet::of_integer(kp));
      big_k = lcm(big_k, d.k);
    }
    // x = K y makes every z_j = (K / k_j) t_j(y) a term, by positive homogeneity.
    auto subst = [&](const Variable& v) -> Term {
      if (v.kind == VarKind::X) return big_k == 1 ? Term::var(v.kind, v.index) : Term::scalar(big_k, Term::var(v.kind, v.index));
      const auto& d = defs[static_cast<std::size_t>(v.index - 1)];
      const auto mult = big_k / d.k;
      return mult == 1 ? d.t : Term::scalar(mult, d.t);
    };
    for (std::size_t e = 0; e < phi.equations.size(); ++e) {
      if (used[e]) continue;
      const auto& eq = phi.equations[e];
      if (!is_group_identity(substitute(eq.lhs, subst), substitute(eq.rhs, subst), std::max<std::size_t>(cap, 32))) {
        trivial = true;
        out.refuted.push_back(print_equation(eq));
      }
    }
  }
  out.cls = trivial ? AEClass::trivial(Family::G) : AEClass::divisible(Family::G, primes);
  return out;
}

AEClass classify_group_sentences(const std::vector<EFDSentence>& sentences, std::size_t cap) {
  return classify_group_sentences_detailed(sentences, cap).cls;
}

AEClass classify_delta_kts(const std::vector<DeltaKT>& ds, std::size_t cap) {
  PrimeSet primes;
  for (const auto& d : ds) primes = primes.unite(PrimeSet::of_integer(reduce_delta_kt(d, cap)));
  return AEClass::divisible(Family::G, primes);
}

EFDSentence absurd_sentence(Signature sig) {
  EFDSentence s;
  s.signature = sig;
  s.n = 1;
  s.m = 1;
  s.equations = {{Term::z(1), Term::x(1)}, {Term::x(1), Term::zero()}};
  return s;
}

bool delta_equivalent(std::int64_t k1, std::int64_t k2) {
  return PrimeSet::of_integer(k1) == PrimeSet::of_integer(k2);
}

}  // namespace efdkit
