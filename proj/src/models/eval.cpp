#include "evaluator.hpp"

namespace efdkit {

Element eval(const Algebra& a, const Term& t, const Assignment& env) {
  for (const auto& [v, e] : env) a.require_contains(e);
  detail::ConcreteOps ops;
  return detail::evaluate(a, t, ops, [&](const Variable& v) -> Element {
    auto it = env.find(v);
    if (it == env.end()) throw InvalidArgument("no value assigned to " + variable_name(v));
    return it->second;
  });
}

bool holds(const Algebra& a, const Equation& eq, const Assignment& env) {
  return eval(a, eq.lhs, env) == eval(a, eq.rhs, env);
}

bool radical_member(const Algebra& a, const Element& e) {
  if (a.species() != Signature::MV) throw SignatureError("the radical is defined for MV algebras");
  a.require_contains(e);
  const Term sq = Term::times(Term::x(1), Term::x(1));
  return eval(a, sq, {{Variable{VarKind::X, 1}, e}}) == a.zero();
}

}  // namespace efdkit
