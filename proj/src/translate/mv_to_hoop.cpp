#include "efdkit/errors.hpp"
#include "efdkit/lattice.hpp"
#include "efdkit/syntax.hpp"
#include "efdkit/translate.hpp"

namespace efdkit {

namespace {

// On radical arguments every MV term denotes either a radical element h
// (co = false) or the co-radical element ~h (co = true), with h a hoop term.
struct Typed {
  bool co = false;
  Term h;
};

Typed rad(Term h) { return {false, std::move(h)}; }
Typed corad(Term h) { return {true, std::move(h)}; }

bool is_zero(const Term& t) { return t.op() == Op::Zero; }

Term hplus(const Term& a, const Term& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  return Term::plus(a, b);
}

Term hdiff(const Term& a, const Term& b) {
  if (is_zero(b)) return a;
  if (is_zero(a) || a == b) return Term::zero();
  return Term::diff(a, b);
}

Term hscale(std::int64_t k, const Term& a) {
  if (k == 0 || is_zero(a)) return Term::zero();
  if (k == 1) return a;
  return Term::scalar(k, a);
}

Typed type(const Term& t) {
  switch (t.op()) {
    case Op::Zero: return rad(t);
    case Op::Var: return rad(t);
    case Op::MVNeg: {
      Typed a = type(t.operand());
      return {!a.co, a.h};
    }
    case Op::Scalar: {
      const auto k = t.coefficient();
      Typed a = type(t.operand());
      if (!a.co) return rad(hscale(k, a.h));
      if (k == 0) return rad(Term::zero());
      return k == 1 ? a : corad(Term::zero());
    }
    case Op::Power: {
      const auto k = t.coefficient();
      Typed a = type(t.operand());
      if (k == 1) return a;
      if (!a.co) return rad(Term::zero());
      return corad(hscale(k, a.h));
    }
    default: break;
  }
  const Typed a = type(t.left()), b = type(t.right());
  switch (t.op()) {
    case Op::Plus:
      if (!a.co && !b.co) return rad(hplus(a.h, b.h));
      if (a.co && b.co) return corad(Term::zero());
      return a.co ? corad(hdiff(a.h, b.h)) : corad(hdiff(b.h, a.h));
    case Op::Join:
      if (!a.co && !b.co) return rad(hplus(a.h, hdiff(b.h, a.h)));
      if (a.co && b.co) return corad(hdiff(a.h, hdiff(a.h, b.h)));
      return a.co ? a : b;
    case Op::Meet:
      if (!a.co && !b.co) return rad(hdiff(a.h, hdiff(a.h, b.h)));
      if (a.co && b.co) return corad(hplus(a.h, hdiff(b.h, a.h)));
      return a.co ? b : a;
    case Op::Times:
      if (!a.co && !b.co) return rad(Term::zero());
      if (a.co && b.co) return corad(hplus(a.h, b.h));
      return a.co ? rad(hdiff(b.h, a.h)) : rad(hdiff(a.h, b.h));
    case Op::Diff:
      if (!a.co && !b.co) return rad(hdiff(a.h, b.h));
      if (!a.co) return rad(Term::zero());
      if (!b.co) return corad(hplus(a.h, b.h));
      return rad(hdiff(b.h, a.h));
    default: throw SignatureError("not an MV term");
  }
}

void flatten_sum(const Term& t, std::vector<Term>& out) {
  if (t.op() == Op::Plus) {
    flatten_sum(t.left(), out);
    flatten_sum(t.right(), out);
  } else {
    out.push_back(t);
  }
}

// s = 0 in a hoop holds iff every summand of s is 0; (p -. q) + (q -. p) = 0 is p = q.
void split_zero(const Term& s, std::vector<Equation>& out) {
  std::vector<Term> parts;
  flatten_sum(s, parts);
  std::vector<bool> done(parts.size(), false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (done[i]) continue;
    if (parts[i].op() == Op::Diff) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        if (!done[j] && parts[j].op() == Op::Diff && parts[j].left() == parts[i].right() &&
            parts[j].right() == parts[i].left()) {
          out.push_back({parts[i].left(), parts[i].right()});
          done[i] = done[j] = true;
          break;
        }
      }
    }
    if (!done[i]) {
      out.push_back({parts[i], Term::zero()});
      done[i] = true;
    }
  }
}

}  // namespace

EFDSentence mv_to_hoop(const EFDSentence& phi) {
  phi.validate();
  if (phi.signature != Signature::MV) throw SignatureError("mv_to_hoop takes an MV sentence");
  EFDSentence out;
  out.signature = Signature::Hoop;
  out.n = phi.n;
  out.m = phi.m;
  std::vector<Equation> eqs;
  for (const auto& eq : phi.equations) {
    const Typed l = type(eq.lhs), r = type(eq.rhs);
    if (l.co != r.co) {
      throw FragmentError("equation compares a radical with a co-radical value on radical arguments: " +
                          print_equation(eq));
    }
    if (is_zero(r.h)) split_zero(l.h, eqs);
    else if (is_zero(l.h)) split_zero(r.h, eqs);
    else eqs.push_back({l.h, r.h});
  }
  for (const auto& eq : eqs) {
    if (!(eq.lhs == eq.rhs)) out.equations.push_back(eq);
  }
  if (out.equations.empty()) out.equations.push_back({Term::zero(), Term::zero()});
  return out;
}

EFDSentence boolean_marker_sentence() { return identity_as_sentence(boolean_identity()); }

MVClassification classify_mv_sentences_detailed(const std::vector<EFDSentence>& sentences, std::size_t cap) {
  MVClassification out;
  out.cls = AEClass::divisible(Family::P, {});
  const EFDSentence marker = boolean_marker_sentence();
  for (const auto& phi : sentences) {
    phi.validate();
    if (phi.signature != Signature::MV) throw SignatureError("classify_mv_sentences takes MV sentences");
    MVSentenceTrace tr;
    tr.input = phi;
    if (phi == marker) {
      tr.boolean_marker = true;
      tr.cls = AEClass::boolean();
    } else if (!check_in_two(phi).holds) {
      tr.in_two = false;
      tr.cls = AEClass::trivial(Family::P);
      out.per_paper_scope = true;
    } else {
      tr.cls = AEClass::divisible(Family::P, {});
      for (const auto& basic : phi_rad_decompose(phi)) {
        MVBranch b;
        b.sign = basic.sign;
        b.hoop = mv_to_hoop(basic);
        b.group = star_sentence(b.hoop);
        b.group_class = classify_group_sentences_detailed({b.group}, cap);
        // A radical forced to be trivial leaves only 2, the Boolean case.
        b.cls = b.group_class.cls.kind == AEClass::Kind::Trivial ? AEClass::boolean()
                                                                  : AEClass::divisible(Family::P, b.group_class.cls.primes);
        tr.cls = meet(tr.cls, b.cls);
        tr.branches.push_back(std::move(b));
      }
    }
    out.cls = meet(out.cls, tr.cls);
    out.sentences.push_back(std::move(tr));
  }
  return out;
}

AEClass classify_mv_sentences(const std::vector<EFDSentence>& sentences, std::size_t cap) {
  return classify_mv_sentences_detailed(sentences, cap).cls;
}

}  // namespace efdkit
