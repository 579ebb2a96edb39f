#include <map>

#include "efdkit/canonical.hpp"
#include "efdkit/errors.hpp"

namespace efdkit {

namespace {

// Lattice term with the forms stored inline, before deduplication.
struct FNode {
  LatticeNode::Kind kind = LatticeNode::Kind::Leaf;
  LinearForm f;
  std::vector<FNode> ch;
};

FNode leaf(LinearForm f) { return {LatticeNode::Kind::Leaf, std::move(f), {}}; }
FNode node(LatticeNode::Kind k, FNode a, FNode b) { return {k, {}, {std::move(a), std::move(b)}}; }

LatticeNode::Kind dual(LatticeNode::Kind k) {
  return k == LatticeNode::Kind::Join ? LatticeNode::Kind::Meet : LatticeNode::Kind::Join;
}

FNode add(const FNode& a, const FNode& b) {
  if (a.kind == LatticeNode::Kind::Leaf && b.kind == LatticeNode::Kind::Leaf) return leaf(a.f + b.f);
  if (a.kind != LatticeNode::Kind::Leaf) return node(a.kind, add(a.ch[0], b), add(a.ch[1], b));
  return node(b.kind, add(a, b.ch[0]), add(a, b.ch[1]));
}

FNode negate(const FNode& a) {
  if (a.kind == LatticeNode::Kind::Leaf) return leaf(-a.f);
  return node(dual(a.kind), negate(a.ch[0]), negate(a.ch[1]));
}

FNode scale(std::int64_t k, const FNode& a) {
  if (k < 0) return negate(scale(checked_neg(k), a));
  if (a.kind == LatticeNode::Kind::Leaf) return leaf(a.f.scaled(k));
  return node(a.kind, scale(k, a.ch[0]), scale(k, a.ch[1]));
}

FNode distribute(const Term& t, std::size_t n) {
  switch (t.op()) {
    case Op::Zero: return leaf(LinearForm::zero(n));
    case Op::Var: {
      const auto v = t.variable();
      if (v.kind != VarKind::X) throw InvalidArgument("lattice normal form takes x-variables only, got " + variable_name(v));
      return leaf(LinearForm::unit(n, static_cast<std::size_t>(v.index - 1)));
    }
    case Op::Plus: return add(distribute(t.left(), n), distribute(t.right(), n));
    case Op::Neg: return negate(distribute(t.operand(), n));
    case Op::Scalar: return scale(t.coefficient(), distribute(t.operand(), n));
    case Op::Join: return node(LatticeNode::Kind::Join, distribute(t.left(), n), distribute(t.right(), n));
    case Op::Meet: return node(LatticeNode::Kind::Meet, distribute(t.left(), n), distribute(t.right(), n));
    case Op::Diff:
      // a -. b = (a - b) \/ 0 in any l-group
      return node(LatticeNode::Kind::Join, add(distribute(t.left(), n), negate(distribute(t.right(), n))),
                  leaf(LinearForm::zero(n)));
    default: throw SignatureError("not an l-group term");
  }
}

LatticeNode index_forms(const FNode& f, std::map<LinearForm, std::size_t>& seen, std::vector<LinearForm>& forms) {
  if (f.kind == LatticeNode::Kind::Leaf) {
    auto [it, fresh] = seen.emplace(f.f, forms.size());
    if (fresh) forms.push_back(f.f);
    return LatticeNode::leaf(it->second);
  }
  LatticeNode a = index_forms(f.ch[0], seen, forms);
  LatticeNode b = index_forms(f.ch[1], seen, forms);
  return {f.kind, 0, {std::move(a), std::move(b)}};
}

Rational eval_node(const LatticeNode& nd, const std::vector<Rational>& values) {
  if (nd.kind == LatticeNode::Kind::Leaf) return values[nd.form];
  Rational a = eval_node(nd.children[0], values), b = eval_node(nd.children[1], values);
  if (nd.kind == LatticeNode::Kind::Join) return a < b ? b : a;
  return a < b ? a : b;
}

}  // namespace

LatticeNormal distribute_to_lattice_normal(const Term& t, std::size_t n) {
  const int top = max_index(t, VarKind::X);
  if (mentions_kind(t, VarKind::Z)) throw InvalidArgument("lattice normal form takes x-variables only");
  if (n == 0) n = static_cast<std::size_t>(top);
  if (static_cast<std::size_t>(top) > n) throw DimensionMismatch("term mentions x" + std::to_string(top) + " but n = " + std::to_string(n));
  LatticeNormal out;
  out.n = n;
  std::map<LinearForm, std::size_t> seen;
  out.root = index_forms(distribute(t, n), seen, out.forms);
  return out;
}

Rational LatticeNormal::evaluate(const RationalVector& x) const {
  if (x.size() != n) throw DimensionMismatch("point has the wrong dimension");
  std::vector<Rational> values;
  values.reserve(forms.size());
  for (const auto& f : forms) values.push_back(f.evaluate(x));
  return eval_node(root, values);
}

}  // namespace efdkit
