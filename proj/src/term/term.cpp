#include "efdkit/term.hpp"

#include <algorithm>
#include <set>

#include "efdkit/errors.hpp"
#include "efdkit/syntax.hpp"

namespace efdkit {

std::string_view to_string(Signature sig) {
  switch (sig) {
    case Signature::Group: return "group";
    case Signature::Hoop: return "hoop";
    case Signature::MV: return "mv";
  }
  return "?";
}

Signature signature_from_string(std::string_view name) {
  if (name == "group" || name == "g") return Signature::Group;
  if (name == "hoop" || name == "h") return Signature::Hoop;
  if (name == "mv" || name == "p") return Signature::MV;
  throw InvalidArgument("unknown signature '" + std::string(name) + "'");
}

std::string variable_name(const Variable& v) {
  return (v.kind == VarKind::X ? "x" : "z") + std::to_string(v.index);
}

struct Term::Node {
  Op op = Op::Zero;
  Variable var{};
  std::int64_t k = 0;
  Term a{nullptr};
  Term b{nullptr};
  std::size_t size = 1;
  std::size_t depth = 1;
};

Term::Term() {
  static const std::shared_ptr<const Node> zero = std::make_shared<const Node>(Node{});
  node_ = zero;
}

Term::Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Term Term::var(VarKind kind, int index) {
  if (index < 1) throw InvalidArgument("variable indices are 1-based");
  Node n;
  n.op = Op::Var;
  n.var = Variable{kind, index};
  return Term(std::make_shared<const Node>(std::move(n)));
}

#define EFDKIT_BINARY(NAME, OP)                                   \
  Term Term::NAME(Term a, Term b) {                               \
    Node n;                                                       \
    n.op = OP;                                                    \
    n.size = 1 + a.size() + b.size();                             \
    n.depth = 1 + std::max(a.depth(), b.depth());                 \
    n.a = std::move(a);                                           \
    n.b = std::move(b);                                           \
    return Term(std::make_shared<const Node>(std::move(n)));      \
  }

EFDKIT_BINARY(plus, Op::Plus)
EFDKIT_BINARY(join, Op::Join)
EFDKIT_BINARY(meet, Op::Meet)
EFDKIT_BINARY(diff, Op::Diff)
EFDKIT_BINARY(times, Op::Times)
#undef EFDKIT_BINARY

Term Term::make_unary(Op op, std::int64_t k, Term a) {
  Node n;
  n.op = op;
  n.k = k;
  n.size = 1 + a.size();
  n.depth = 1 + a.depth();
  n.a = std::move(a);
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::neg(Term a) { return make_unary(Op::Neg, 0, std::move(a)); }
Term Term::mv_neg(Term a) { return make_unary(Op::MVNeg, 0, std::move(a)); }
Term Term::scalar(std::int64_t k, Term a) { return make_unary(Op::Scalar, k, std::move(a)); }
Term Term::power(std::int64_t k, Term a) {
  if (k < 1) throw InvalidArgument("powers need k >= 1");
  return make_unary(Op::Power, k, std::move(a));
}

Op Term::op() const noexcept { return node_->op; }

bool Term::is_binary() const noexcept {
  switch (node_->op) {
    case Op::Plus:
    case Op::Join:
    case Op::Meet:
    case Op::Diff:
    case Op::Times: return true;
    default: return false;
  }
}

bool Term::is_unary() const noexcept {
  switch (node_->op) {
    case Op::Neg:
    case Op::MVNeg:
    case Op::Scalar:
    case Op::Power: return true;
    default: return false;
  }
}

Variable Term::variable() const {
  if (node_->op != Op::Var) throw InvalidArgument("not a variable");
  return node_->var;
}

std::int64_t Term::coefficient() const {
  if (node_->op != Op::Scalar && node_->op != Op::Power) throw InvalidArgument("no coefficient");
  return node_->k;
}

const Term& Term::left() const { return node_->a; }
const Term& Term::right() const { return node_->b; }
const Term& Term::operand() const { return node_->a; }
std::size_t Term::size() const noexcept { return node_->size; }
std::size_t Term::depth() const noexcept { return node_->depth; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.size != y.size) return false;
  switch (x.op) {
    case Op::Zero: return true;
    case Op::Var: return x.var == y.var;
    case Op::Neg:
    case Op::MVNeg: return x.a == y.a;
    case Op::Scalar:
    case Op::Power: return x.k == y.k && x.a == y.a;
    default: return x.a == y.a && x.b == y.b;
  }
}

namespace {

const char* op_name(Op op) {
  switch (op) {
    case Op::Var: return "variable";
    case Op::Zero: return "0";
    case Op::Plus: return "+";
    case Op::Neg: return "unary -";
    case Op::Join: return "\\/";
    case Op::Meet: return "/\\";
    case Op::Diff: return "-.";
    case Op::MVNeg: return "~";
    case Op::Times: return "*";
    case Op::Scalar: return "scalar";
    case Op::Power: return "^";
  }
  return "?";
}

// Returns a description of the first inadmissible node, or empty.
std::string first_violation(Signature sig, const Term& t) {
  bool ok = true;
  switch (t.op()) {
    case Op::Var:
    case Op::Zero:
    case Op::Plus: break;
    case Op::Neg: ok = sig == Signature::Group; break;
    case Op::Join:
    case Op::Meet: ok = sig != Signature::Hoop; break;
    case Op::Diff: ok = sig != Signature::Group; break;
    case Op::MVNeg:
    case Op::Times:
    case Op::Power: ok = sig == Signature::MV; break;
    case Op::Scalar:
      ok = sig == Signature::Group || t.coefficient() >= 1;
      if (!ok) return "scalar " + std::to_string(t.coefficient()) + " (needs k >= 1 in " + std::string(to_string(sig)) + ")";
      break;
  }
  if (!ok) return std::string("operation ") + op_name(t.op()) + " in a " + std::string(to_string(sig)) + " term";
  if (t.is_binary()) {
    auto l = first_violation(sig, t.left());
    if (!l.empty()) return l;
    return first_violation(sig, t.right());
  }
  if (t.is_unary()) return first_violation(sig, t.operand());
  return {};
}

void collect_vars(const Term& t, std::set<Variable>& out) {
  if (t.op() == Op::Var) {
    out.insert(t.variable());
  } else if (t.is_binary()) {
    collect_vars(t.left(), out);
    collect_vars(t.right(), out);
  } else if (t.is_unary()) {
    collect_vars(t.operand(), out);
  }
}

Term rebuild(const Term& t, Term a, Term b) {
  switch (t.op()) {
    case Op::Plus: return Term::plus(std::move(a), std::move(b));
    case Op::Join: return Term::join(std::move(a), std::move(b));
    case Op::Meet: return Term::meet(std::move(a), std::move(b));
    case Op::Diff: return Term::diff(std::move(a), std::move(b));
    case Op::Times: return Term::times(std::move(a), std::move(b));
    case Op::Neg: return Term::neg(std::move(a));
    case Op::MVNeg: return Term::mv_neg(std::move(a));
    case Op::Scalar: return Term::scalar(t.coefficient(), std::move(a));
    case Op::Power: return Term::power(t.coefficient(), std::move(a));
    default: return t;
  }
}

// k-fold right-nested sum t + (t + (...)).
Term repeated_sum(const Term& t, std::int64_t k) {
  Term acc = t;
  for (std::int64_t i = 1; i < k; ++i) acc = Term::plus(t, acc);
  return acc;
}

Term mv_join(const Term& a, const Term& b) {
  return Term::plus(Term::mv_neg(Term::plus(Term::mv_neg(a), b)), b);
}

Term mv_times(const Term& a, const Term& b) {
  return Term::mv_neg(Term::plus(Term::mv_neg(a), Term::mv_neg(b)));
}

Term expand(const Term& t, Signature sig) {
  switch (t.op()) {
    case Op::Var:
    case Op::Zero: return t;
    case Op::Scalar: {
      const auto k = t.coefficient();
      if (k == 0) return Term::zero();
      Term inner = expand(t.operand(), sig);
      if (k > 0) return repeated_sum(inner, k);
      return Term::neg(repeated_sum(inner, -k));
    }
    default: break;
  }
  if (sig == Signature::MV) {
    switch (t.op()) {
      case Op::Join: return mv_join(expand(t.left(), sig), expand(t.right(), sig));
      case Op::Meet:
        return Term::mv_neg(mv_join(Term::mv_neg(expand(t.left(), sig)), Term::mv_neg(expand(t.right(), sig))));
      case Op::Times: return mv_times(expand(t.left(), sig), expand(t.right(), sig));
      case Op::Diff:
        return Term::mv_neg(Term::plus(Term::mv_neg(expand(t.left(), sig)), expand(t.right(), sig)));
      case Op::Power: {
        Term base = expand(t.operand(), sig);
        Term acc = base;
        for (std::int64_t i = 1; i < t.coefficient(); ++i) acc = mv_times(acc, base);
        return acc;
      }
      default: break;
    }
  }
  if (t.is_binary()) return rebuild(t, expand(t.left(), sig), expand(t.right(), sig));
  if (t.is_unary()) return rebuild(t, expand(t.operand(), sig), Term());
  return t;
}

void check_vars(const Term& t, int n, int m, const char* where) {
  for (const auto& v : variables_of(t)) {
    const int bound = v.kind == VarKind::X ? n : m;
    if (v.index > bound)
      throw InvalidArgument(std::string("variable ") + variable_name(v) + " is not bound in " + where);
  }
}

}  // namespace

bool admits(Signature sig, const Term& t) { return first_violation(sig, t).empty(); }

void require_admits(Signature sig, const Term& t) {
  auto v = first_violation(sig, t);
  if (!v.empty()) throw SignatureError("signature violation: " + v);
}

std::vector<Variable> variables_of(const Term& t) {
  std::set<Variable> vars;
  collect_vars(t, vars);
  return {vars.begin(), vars.end()};
}

bool mentions_kind(const Term& t, VarKind kind) {
  if (t.op() == Op::Var) return t.variable().kind == kind;
  if (t.is_binary()) return mentions_kind(t.left(), kind) || mentions_kind(t.right(), kind);
  if (t.is_unary()) return mentions_kind(t.operand(), kind);
  return false;
}

int max_index(const Term& t, VarKind kind) {
  int best = 0;
  for (const auto& v : variables_of(t))
    if (v.kind == kind) best = std::max(best, v.index);
  return best;
}

Term substitute(const Term& t, const std::function<Term(const Variable&)>& f) {
  if (t.op() == Op::Var) return f(t.variable());
  if (t.is_binary()) return rebuild(t, substitute(t.left(), f), substitute(t.right(), f));
  if (t.is_unary()) return rebuild(t, substitute(t.operand(), f), Term());
  return t;
}

Term expand_macros(const Term& t, Signature sig) { return expand(t, sig); }

void EFDSentence::validate() const {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  if (m < 1) throw InvalidArgument("an EFD-sentence needs m >= 1 (use Identity for m = 0)");
  if (equations.empty()) throw InvalidArgument("an EFD-sentence needs at least one equation");
  for (const auto& e : equations) {
    require_admits(signature, e.lhs);
    require_admits(signature, e.rhs);
    check_vars(e.lhs, n, m, "the sentence");
    check_vars(e.rhs, n, m, "the sentence");
  }
}

void Identity::validate() const {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  require_admits(signature, equation.lhs);
  require_admits(signature, equation.rhs);
  check_vars(equation.lhs, n, 0, "the identity");
  check_vars(equation.rhs, n, 0, "the identity");
}

QuasiIdentity uniqueness_quasiidentity(const EFDSentence& phi) {
  phi.validate();
  QuasiIdentity q;
  q.signature = phi.signature;
  q.n = phi.n;
  q.m = phi.m;
  const int m = phi.m;
  auto shifted = [m](const Variable& v) {
    return v.kind == VarKind::Z ? Term::z(v.index + m) : Term::var(v.kind, v.index);
  };
  for (const auto& e : phi.equations) q.hypotheses.push_back(e);
  for (const auto& e : phi.equations)
    q.hypotheses.push_back(Equation{substitute(e.lhs, shifted), substitute(e.rhs, shifted)});
  for (int j = 1; j <= m; ++j) q.conclusions.push_back(Equation{Term::z(j), Term::z(j + m)});
  return q;
}

Term build_t_k(std::int64_t k) {
  if (k < 1) throw InvalidArgument("t_k needs k >= 1");
  const Term z = Term::z(1);
  const Term kz = k == 1 ? z : Term::scalar(k, z);
  const Term zk = k == 1 ? z : Term::power(k, z);
  return Term::join(Term::meet(kz, Term::mv_neg(Term::scalar(2, Term::power(2, z)))), zk);
}

EFDSentence build_delta_k(std::int64_t k, Signature sig) {
  if (k < 1) throw InvalidArgument("delta_k needs k >= 1");
  if (sig == Signature::MV) throw InvalidArgument("delta_k is a group or hoop sentence");
  EFDSentence s;
  s.signature = sig;
  s.n = 1;
  s.m = 1;
  s.equations.push_back(Equation{Term::scalar(k, Term::z(1)), Term::x(1)});
  return s;
}

EFDSentence build_epsilon_k(std::int64_t k) {
  if (k < 1) throw InvalidArgument("epsilon_k needs k >= 1");
  EFDSentence s;
  s.signature = Signature::MV;
  s.n = 1;
  s.m = 1;
  s.equations.push_back(Equation{build_t_k(k), Term::x(1)});
  return s;
}

Identity boolean_identity() {
  return Identity{Signature::MV, 1, Equation{Term::scalar(2, Term::x(1)), Term::x(1)}};
}

EFDSentence identity_as_sentence(const Identity& id) {
  id.validate();
  EFDSentence s;
  s.signature = id.signature;
  s.n = id.n;
  s.m = 1;
  s.equations.push_back(id.equation);
  s.equations.push_back(Equation{Term::z(1), id.n >= 1 ? Term::x(1) : Term::zero()});
  return s;
}

}  // namespace efdkit
