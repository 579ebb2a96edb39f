#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"
#include "efdkit/syntax.hpp"
#include "efdkit/translate.hpp"

namespace efdkit {

namespace {

constexpr int kTwoBound = 20;

Bits bits_of(std::size_t mask, int len) {
  Bits b(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) b[static_cast<std::size_t>(i)] = static_cast<int>(mask >> i & 1);
  return b;
}

std::string show(const Bits& b) {
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ")";
}

// (x * ~y) + (y * ~x): zero exactly when x = y.
Term distance(const Term& x, const Term& y) {
  return Term::plus(Term::times(x, Term::mv_neg(y)), Term::times(y, Term::mv_neg(x)));
}

Equation encode_or(const Equation& a, const Equation& b) {
  return {Term::meet(distance(a.lhs, a.rhs), distance(b.lhs, b.rhs)), Term::zero()};
}

}  // namespace

TwoCheck check_in_two(const EFDSentence& phi) {
  phi.validate();
  if (phi.signature != Signature::MV) throw SignatureError("check_in_two takes an MV sentence");
  if (phi.n + phi.m > kTwoBound) {
    throw FragmentError("n + m = " + std::to_string(phi.n + phi.m) + " exceeds the exhaustive bound " +
                        std::to_string(kTwoBound));
  }
  const auto two = Algebra::two();
  TwoCheck out;
  out.holds = true;
  for (std::size_t xm = 0; xm < (std::size_t{1} << phi.n); ++xm) {
    const Bits e = bits_of(xm, phi.n);
    Assignment env;
    for (int i = 0; i < phi.n; ++i) env[{VarKind::X, i + 1}] = {Rational(e[static_cast<std::size_t>(i)])};
    std::vector<Bits> sols;
    for (std::size_t zm = 0; zm < (std::size_t{1} << phi.m) && sols.size() < 2; ++zm) {
      const Bits f = bits_of(zm, phi.m);
      for (int j = 0; j < phi.m; ++j) env[{VarKind::Z, j + 1}] = {Rational(f[static_cast<std::size_t>(j)])};
      bool ok = true;
      for (const auto& eq : phi.equations) {
        if (!holds(two, eq, env)) {
          ok = false;
          break;
        }
      }
      if (ok) sols.push_back(f);
    }
    if (sols.size() != 1) {
      out.holds = false;
      out.failing = e;
      out.reason = sols.empty() ? "no-solution" : "non-unique";
      out.witness.clear();
      return out;
    }
    out.witness[e] = sols[0];
  }
  return out;
}

std::vector<RadBasicSentence> phi_rad_decompose(const EFDSentence& phi) {
  const TwoCheck tc = check_in_two(phi);
  if (!tc.holds) {
    throw FragmentError("the sentence fails in 2 at e = " + show(*tc.failing) + " (" + tc.reason + ")");
  }
  std::vector<RadBasicSentence> out;
  for (const auto& [e, e2] : tc.witness) {
    auto flip = [&](const Variable& v) {
      const Bits& s = v.kind == VarKind::X ? e : e2;
      const Term t = Term::var(v.kind, v.index);
      return s[static_cast<std::size_t>(v.index - 1)] ? Term::mv_neg(t) : t;
    };
    std::vector<Equation> alpha;
    for (const auto& eq : phi.equations) alpha.push_back({substitute(eq.lhs, flip), substitute(eq.rhs, flip)});

    RadBasicSentence r;
    r.sign = e;
    r.sign_z = e2;
    r.sentence.signature = Signature::MV;
    r.sentence.n = phi.n;
    r.sentence.m = phi.m;
    if (phi.n == 0) {
      // rho is empty (true) and rho~ is false: the disjunction is alpha itself.
      r.sentence.equations = alpha;
    } else {
      std::vector<Equation> left, right;
      for (int i = 1; i <= phi.n; ++i) left.push_back({Term::power(2, Term::x(i)), Term::zero()});
      left.insert(left.end(), alpha.begin(), alpha.end());
      Term negs = Term::mv_neg(Term::x(1));
      for (int i = 2; i <= phi.n; ++i) negs = Term::meet(negs, Term::mv_neg(Term::x(i)));
      right.push_back({Term::power(2, negs), Term::zero()});
      for (int j = 1; j <= phi.m; ++j) right.push_back({Term::z(j), Term::zero()});
      for (const auto& a : left)
        for (const auto& b : right) r.sentence.equations.push_back(encode_or(a, b));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace efdkit
