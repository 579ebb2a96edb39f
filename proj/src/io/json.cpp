#include "efdkit/json.hpp"

#include "efdkit/errors.hpp"
#include "efdkit/syntax.hpp"

namespace efdkit {

namespace {

constexpr const char* kNodeNames[] = {"var",  "zero",  "plus",  "neg",    "join", "meet",
                                      "diff", "mvneg", "times", "scalar", "power"};

Op op_from_name(const std::string& name) {
  for (std::size_t i = 0; i < std::size(kNodeNames); ++i) {
    if (name == kNodeNames[i]) return static_cast<Op>(i);
  }
  throw InvalidArgument("unknown term node '" + name + "'");
}

Variable variable_from_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'z')) throw InvalidArgument("bad variable name '" + name + "'");
  int index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw InvalidArgument("bad variable name '" + name + "'");
    index = index * 10 + (name[i] - '0');
  }
  if (index < 1) throw InvalidArgument("variable indices start at 1");
  return {name[0] == 'x' ? VarKind::X : VarKind::Z, index};
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

Json bits_json(const Bits& b) { return Json(b); }

std::string family_name(Family f) { return to_string(f); }

const char* kind_name(AEClass::Kind k) {
  switch (k) {
    case AEClass::Kind::Trivial: return "trivial";
    case AEClass::Kind::Boolean: return "boolean";
    case AEClass::Kind::Divisible: return "divisible";
  }
  return "?";
}

const char* status_name(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Consistent: return "consistent-on-sample";
    case Verdict::Status::Falsified: return "falsified";
    case Verdict::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace

Json with_schema(const std::string& name, const Json& body) {
  Json out;
  out["schema"] = "efdkit." + name + "/1";
  if (body.is_object()) {
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  } else {
    out["value"] = body;
  }
  return out;
}

Json to_json(const Term& t) {
  Json j;
  j["node"] = kNodeNames[static_cast<std::size_t>(t.op())];
  switch (t.op()) {
    case Op::Var: j["name"] = variable_name(t.variable()); break;
    case Op::Zero: break;
    case Op::Scalar:
    case Op::Power:
      j["k"] = t.coefficient();
      j["operand"] = to_json(t.operand());
      break;
    case Op::Neg:
    case Op::MVNeg: j["operand"] = to_json(t.operand()); break;
    default:
      j["left"] = to_json(t.left());
      j["right"] = to_json(t.right());
  }
  return j;
}

Term term_from_json(const Json& j) {
  const Op op = op_from_name(field(j, "node").get<std::string>());
  switch (op) {
    case Op::Var: {
      const Variable v = variable_from_name(field(j, "name").get<std::string>());
      return Term::var(v.kind, v.index);
    }
    case Op::Zero: return Term::zero();
    case Op::Scalar: return Term::scalar(field(j, "k").get<std::int64_t>(), term_from_json(field(j, "operand")));
    case Op::Power: return Term::power(field(j, "k").get<std::int64_t>(), term_from_json(field(j, "operand")));
    case Op::Neg: return Term::neg(term_from_json(field(j, "operand")));
    case Op::MVNeg: return Term::mv_neg(term_from_json(field(j, "operand")));
    default: break;
  }
  Term l = term_from_json(field(j, "left")), r = term_from_json(field(j, "right"));
  switch (op) {
    case Op::Plus: return Term::plus(l, r);
    case Op::Join: return Term::join(l, r);
    case Op::Meet: return Term::meet(l, r);
    case Op::Diff: return Term::diff(l, r);
    default: return Term::times(l, r);
  }
}

Json to_json(const Equation& e) {
  Json j;
  j["lhs"] = to_json(e.lhs);
  j["rhs"] = to_json(e.rhs);
  return j;
}

Json to_json(const EFDSentence& s) {
  Json j;
  j["signature"] = std::string(to_string(s.signature));
  j["n"] = s.n;
  j["m"] = s.m;
  j["text"] = print_sentence(s);
  j["equations"] = Json::array();
  for (const auto& e : s.equations) j["equations"].push_back(to_json(e));
  return j;
}

EFDSentence sentence_from_json(const Json& j) {
  EFDSentence s;
  s.signature = signature_from_string(field(j, "signature").get<std::string>());
  s.n = field(j, "n").get<int>();
  s.m = field(j, "m").get<int>();
  for (const auto& e : field(j, "equations")) {
    s.equations.push_back({term_from_json(field(e, "lhs")), term_from_json(field(e, "rhs"))});
  }
  s.validate();
  return s;
}

Json to_json(const Identity& id) {
  Json j;
  j["signature"] = std::string(to_string(id.signature));
  j["n"] = id.n;
  j["text"] = print_identity(id);
  j["equation"] = to_json(id.equation);
  return j;
}

Json to_json(const QuasiIdentity& q) {
  Json j;
  j["signature"] = std::string(to_string(q.signature));
  j["n"] = q.n;
  j["m"] = q.m;
  j["text"] = print_quasiidentity(q);
  j["hypotheses"] = Json::array();
  for (const auto& e : q.hypotheses) j["hypotheses"].push_back(to_json(e));
  j["conclusions"] = Json::array();
  for (const auto& e : q.conclusions) j["conclusions"].push_back(to_json(e));
  return j;
}

Json to_json(const LinearForm& f) { return Json(f.coeffs); }

Json to_json(const IneqSystem& s) {
  Json j;
  j["n"] = s.n;
  j["rows"] = Json::array();
  for (const auto& r : s.rows) j["rows"].push_back(to_json(r));
  return j;
}

IneqSystem ineq_from_json(const Json& j) {
  IneqSystem s;
  s.n = field(j, "n").get<std::size_t>();
  for (const auto& r : field(j, "rows")) s.rows.emplace_back(r.get<std::vector<std::int64_t>>());
  s.validate();
  return s;
}

Json point_json(const RationalVector& v) {
  Json j = Json::array();
  for (const auto& q : v) j.push_back(q.get_str());
  return j;
}

Json to_json(const FullDimResult& r) {
  Json j;
  j["full"] = r.full;
  if (r.full) {
    j["basis"] = Json::array();
    for (const auto& b : r.basis) j["basis"].push_back(point_json(b));
  } else if (r.vanishing) {
    j["vanishing"] = to_json(*r.vanishing);
  }
  return j;
}

Json to_json(const PiecewiseLinear& p) {
  Json j;
  j["n"] = p.n;
  j["pieces"] = Json::array();
  for (const auto& piece : p.pieces) {
    Json q;
    q["region"] = to_json(piece.region);
    q["form"] = to_json(piece.form);
    q["text"] = to_string(piece.form);
    j["pieces"].push_back(q);
  }
  return j;
}

Json to_json(const PrimeSet& s) {
  if (s.is_finite()) return Json(s.listed());
  Json j;
  j["all_except"] = s.listed();
  return j;
}

Json to_json(const AEClass& c) {
  Json j;
  j["family"] = family_name(c.family);
  j["class"] = kind_name(c.kind);
  if (c.kind == AEClass::Kind::Divisible) j["primes"] = to_json(c.primes);
  return j;
}

Json lattice_json(const AEClass& c) {
  Json j;
  j["family"] = family_name(c.family);
  if (c.kind == AEClass::Kind::Divisible) {
    Json inner;
    inner["divisible"] = to_json(c.primes);
    j["class"] = inner;
  } else {
    j["class"] = kind_name(c.kind);
  }
  return j;
}

Json to_json(const GroupClassification& g) {
  Json j = to_json(g.cls);
  j["k_primes"] = g.k_primes;
  if (!g.refuted.empty()) j["refuted"] = g.refuted;
  return j;
}

Json to_json(const LogicExpansion& e) {
  Json j;
  j["base"] = to_string(e.base);
  j["primes"] = to_json(e.primes);
  j["special"] = e.special == LogicExpansion::Special::None           ? "none"
                 : e.special == LogicExpansion::Special::Inconsistent ? "inconsistent"
                                                                      : "classical";
  j["text"] = e.to_string();
  return j;
}

Json to_json(const AxiomSchema& a) {
  Json j;
  j["name"] = a.name;
  j["formula"] = a.formula;
  j["fresh_symbols"] = a.fresh_symbols;
  j["body"] = to_json(a.body);
  j["note"] = a.note;
  return j;
}

Json to_json(const FinitePoset& p) {
  Json j;
  j["labels"] = p.labels;
  Json covers = Json::array();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b || !p.leq[a][b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < p.size() && cover; ++c) {
        if (c != a && c != b && p.leq[a][c] && p.leq[c][b]) cover = false;
      }
      if (cover) covers.push_back(Json::array({p.labels[a], p.labels[b]}));
    }
  }
  j["covers"] = covers;
  return j;
}

Json to_json(const Element& e) { return to_string(e); }

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["confidence"] = v.confidence;
  j["exhaustive"] = v.exhaustive;
  j["samples"] = v.samples;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (!v.witness.empty()) {
    Json w;
    for (const auto& [var, e] : v.witness) w[variable_name(var)] = to_json(e);
    j["witness"] = w;
  }
  if (!v.solutions.empty()) {
    j["solutions"] = Json::array();
    for (const auto& e : v.solutions) j["solutions"].push_back(to_json(e));
  }
  return j;
}

Json to_json(const TwoCheck& c) {
  Json j;
  j["holds"] = c.holds;
  if (c.holds) {
    j["witness"] = Json::array();
    for (const auto& [e, e2] : c.witness) {
      Json w;
      w["e"] = bits_json(e);
      w["e_prime"] = bits_json(e2);
      j["witness"].push_back(w);
    }
  } else {
    if (c.failing) j["failing"] = bits_json(*c.failing);
    j["reason"] = c.reason;
  }
  return j;
}

Json to_json(const RadBasicSentence& r) {
  Json j;
  j["sign"] = bits_json(r.sign);
  j["sign_z"] = bits_json(r.sign_z);
  j["sentence"] = to_json(r.sentence);
  return j;
}

Json to_json(const MVClassification& c) {
  Json j = to_json(c.cls);
  j["per_paper_scope"] = c.per_paper_scope;
  j["sentences"] = Json::array();
  for (const auto& tr : c.sentences) {
    Json s;
    s["input"] = print_sentence(tr.input);
    s["boolean_marker"] = tr.boolean_marker;
    s["in_two"] = tr.in_two;
    s["class"] = to_json(tr.cls);
    s["branches"] = Json::array();
    for (const auto& b : tr.branches) {
      Json bj;
      bj["sign"] = bits_json(b.sign);
      bj["hoop"] = print_sentence(b.hoop);
      bj["group"] = print_sentence(b.group);
      bj["group_class"] = to_json(b.group_class);
      bj["class"] = to_json(b.cls);
      s["branches"].push_back(bj);
    }
    j["sentences"].push_back(s);
  }
  return j;
}

}  // namespace efdkit
