#include "efdkit/errors.hpp"
#include "efdkit/translate.hpp"

namespace efdkit {

Term star_term(const Term& t) {
  switch (t.op()) {
    case Op::Zero: return t;
    case Op::Var:
      if (t.variable().kind == VarKind::Z) return t;
      return Term::join(t, Term::neg(t));
    case Op::Plus: return Term::plus(star_term(t.left()), star_term(t.right()));
    case Op::Diff: return Term::join(Term::plus(star_term(t.left()), Term::neg(star_term(t.right()))), Term::zero());
    case Op::Scalar:
      if (t.coefficient() < 1) throw SignatureError("hoop scalars are positive");
      return Term::scalar(t.coefficient(), star_term(t.operand()));
    default: throw SignatureError("star is defined on hoop terms only");
  }
}

EFDSentence star_sentence(const EFDSentence& phi) {
  phi.validate();
  if (phi.signature != Signature::Hoop) throw SignatureError("star takes a hoop sentence");
  EFDSentence out;
  out.signature = Signature::Group;
  out.n = phi.n;
  out.m = phi.m;
  for (const auto& eq : phi.equations) out.equations.push_back({star_term(eq.lhs), star_term(eq.rhs)});
  for (int j = 1; j <= phi.m; ++j) out.equations.push_back({Term::join(Term::z(j), Term::zero()), Term::z(j)});
  return out;
}

}  // namespace efdkit
