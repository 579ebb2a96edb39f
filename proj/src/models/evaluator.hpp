#pragma once

// Evaluation shared by concrete elements and by affine tuples a + b*s used
// in the one-variable solver. `Ops` supplies the arithmetic of its value type.

#include <string>

#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"

namespace efdkit::detail {

inline int lex_compare(const Element& a, const Element& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (b[i] < a[i]) return 1;
  }
  return 0;
}

template <class Ops, class Leaf>
typename Ops::Value evaluate(const Algebra& a, const Term& t, Ops& ops, const Leaf& leaf) {
  using V = typename Ops::Value;
  const Signature sp = a.species();
  const bool mv = sp == Signature::MV;
  const bool group = sp == Signature::Group;
  auto reject = [&](const char* what) {
    throw SignatureError(std::string(what) + " cannot be evaluated in " + a.describe());
  };
  auto rec = [&](const Term& s) { return evaluate(a, s, ops, leaf); };
  auto truncate_top = [&](V v) { return ops.min(v, ops.constant(a.unit())); };
  auto truncate_bottom = [&](V v) { return ops.max(v, ops.constant(a.zero())); };

  switch (t.op()) {
    case Op::Zero: return ops.constant(a.zero());
    case Op::Var: return leaf(t.variable());
    case Op::Plus: {
      V s = ops.add(rec(t.left()), rec(t.right()));
      return mv ? truncate_top(std::move(s)) : s;
    }
    case Op::Neg:
      if (!group) reject("group negation");
      return ops.neg(rec(t.operand()));
    case Op::Join: return ops.max(rec(t.left()), rec(t.right()));
    case Op::Meet: return ops.min(rec(t.left()), rec(t.right()));
    case Op::Diff: return truncate_bottom(ops.add(rec(t.left()), ops.neg(rec(t.right()))));
    case Op::MVNeg:
      if (!mv) reject("MV negation");
      return ops.add(ops.constant(a.unit()), ops.neg(rec(t.operand())));
    case Op::Times: {
      if (!mv) reject("'*'");
      V s = ops.add(ops.add(rec(t.left()), rec(t.right())), ops.neg(ops.constant(a.unit())));
      return truncate_bottom(std::move(s));
    }
    case Op::Scalar: {
      const auto k = t.coefficient();
      if (k < 0 && !group) reject("a negative scalar");
      V s = ops.scale(k, rec(t.operand()));
      return mv ? truncate_top(std::move(s)) : s;
    }
    case Op::Power: {
      if (!mv) reject("'^'");
      const auto k = t.coefficient();
      V s = ops.add(ops.scale(k, rec(t.operand())), ops.neg(ops.scale(k - 1, ops.constant(a.unit()))));
      return truncate_bottom(std::move(s));
    }
  }
  throw Error("internal: unknown operation");
}

struct ConcreteOps {
  using Value = Element;
  Value constant(const Element& e) { return e; }
  Value add(Value x, const Value& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
  }
  Value neg(Value x) {
    for (auto& c : x) c = -c;
    return x;
  }
  Value scale(std::int64_t k, Value x) {
    const Rational q(static_cast<long>(k));
    for (auto& c : x) c *= q;
    return x;
  }
  Value max(Value x, Value y) { return lex_compare(x, y) >= 0 ? x : y; }
  Value min(Value x, Value y) { return lex_compare(x, y) <= 0 ? x : y; }
};

}  // namespace efdkit::detail
