#include "efdkit/syntax.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "efdkit/errors.hpp"

namespace efdkit {

namespace {

enum class Tok { End, Int, Var, Plus, Minus, Monus, Join, Meet, Tilde, Star, Caret, LParen, RParen, Eq, Amp, Colon, Word };

struct Token {
  Tok kind = Tok::End;
  std::size_t pos = 0;
  std::string text;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      t.kind = Tok::Int;
      t.text = std::string(s.substr(i, j - i));
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      t.text = std::string(s.substr(i, j - i));
      // exists! carries its bang
      if (t.text == "exists" && j < s.size() && s[j] == '!') {
        t.text += '!';
        ++j;
      }
      const bool is_var = t.text.size() >= 2 && (t.text[0] == 'x' || t.text[0] == 'z') &&
                          t.text.find_first_not_of("0123456789", 1) == std::string::npos;
      t.kind = is_var ? Tok::Var : Tok::Word;
      i = j;
    } else {
      auto two = s.substr(i, 2);
      if (two == "\\/") {
        t.kind = Tok::Join;
        i += 2;
      } else if (two == "/\\") {
        t.kind = Tok::Meet;
        i += 2;
      } else if (two == "-.") {
        t.kind = Tok::Monus;
        i += 2;
      } else {
        switch (c) {
          case '+': t.kind = Tok::Plus; break;
          case '-': t.kind = Tok::Minus; break;
          case '~': t.kind = Tok::Tilde; break;
          case '*': t.kind = Tok::Star; break;
          case '^': t.kind = Tok::Caret; break;
          case '(': t.kind = Tok::LParen; break;
          case ')': t.kind = Tok::RParen; break;
          case '=': t.kind = Tok::Eq; break;
          case '&': t.kind = Tok::Amp; break;
          case ':': t.kind = Tok::Colon; break;
          default: throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        ++i;
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

std::int64_t to_int(const Token& t) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{}) throw ParseError("integer out of range", t.pos);
  return v;
}

Variable to_var(const Token& t) {
  const auto idx = std::stoll(t.text.substr(1));
  if (idx < 1 || idx > std::numeric_limits<int>::max()) throw ParseError("variable indices start at 1", t.pos);
  return Variable{t.text[0] == 'x' ? VarKind::X : VarKind::Z, static_cast<int>(idx)};
}

class Parser {
 public:
  Parser(std::string_view text, Signature sig) : toks_(tokenize(text)), sig_(sig) {}

  Term term() {
    Term t = meetexp();
    while (peek().kind == Tok::Join) {
      const auto pos = next().pos;
      Term r = meetexp();
      t = check(Term::join(std::move(t), std::move(r)), pos);
    }
    return t;
  }

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
    next();
  }

  bool at_word(std::string_view w) const { return peek().kind == Tok::Word && peek().text == w; }

  void finish() {
    if (peek().kind != Tok::End) throw ParseError("unexpected trailing input", peek().pos);
  }

 private:
  Term check(Term t, std::size_t pos) {
    // only the new node is inspected; children were checked when built
    const Term probe = rebuild_leafy(t);
    if (!admits(sig_, probe)) {
      try {
        require_admits(sig_, probe);
      } catch (const SignatureError& e) {
        throw ParseError(e.what(), pos);
      }
    }
    return t;
  }

  static Term rebuild_leafy(const Term& t) {
    const Term z;
    switch (t.op()) {
      case Op::Plus: return Term::plus(z, z);
      case Op::Join: return Term::join(z, z);
      case Op::Meet: return Term::meet(z, z);
      case Op::Diff: return Term::diff(z, z);
      case Op::Times: return Term::times(z, z);
      case Op::Neg: return Term::neg(z);
      case Op::MVNeg: return Term::mv_neg(z);
      case Op::Scalar: return Term::scalar(t.coefficient(), z);
      case Op::Power: return Term::power(t.coefficient(), z);
      default: return t;
    }
  }

  Term meetexp() {
    Term t = sum();
    while (peek().kind == Tok::Meet) {
      const auto pos = next().pos;
      Term r = sum();
      t = check(Term::meet(std::move(t), std::move(r)), pos);
    }
    return t;
  }

  Term sum() {
    Term t = product();
    for (;;) {
      const auto kind = peek().kind;
      if (kind == Tok::Plus) {
        const auto pos = next().pos;
        Term r = product();
        t = check(Term::plus(std::move(t), std::move(r)), pos);
      } else if (kind == Tok::Monus) {
        const auto pos = next().pos;
        Term r = product();
        t = check(Term::diff(std::move(t), std::move(r)), pos);
      } else if (kind == Tok::Minus) {
        const auto pos = next().pos;
        if (sig_ != Signature::Group) throw ParseError("binary '-' is only available in group terms", pos);
        Term r = product();
        t = Term::plus(std::move(t), Term::neg(std::move(r)));
      } else {
        return t;
      }
    }
  }

  Term product() {
    Term t = unary();
    while (peek().kind == Tok::Star) {
      const auto pos = next().pos;
      Term r = unary();
      t = check(Term::times(std::move(t), std::move(r)), pos);
    }
    return t;
  }

  static bool starts_operand(Tok k) { return k == Tok::LParen || k == Tok::Tilde || k == Tok::Int || k == Tok::Var; }

  Term unary() {
    const Token& t = peek();
    if (t.kind == Tok::Minus) {
      const auto pos = next().pos;
      if (peek().kind == Tok::Int && starts_operand(peek(1).kind)) {
        const Token& num = next();
        Term body = unary_operand();
        return check(Term::scalar(-to_int(num), std::move(body)), pos);
      }
      return check(Term::neg(unary()), pos);
    }
    if (t.kind == Tok::Tilde) {
      const auto pos = next().pos;
      return check(Term::mv_neg(unary()), pos);
    }
    if (t.kind == Tok::Int && starts_operand(peek(1).kind)) {
      const Token& num = next();
      Term body = unary_operand();
      return check(Term::scalar(to_int(num), std::move(body)), num.pos);
    }
    return postfix();
  }

  Term unary_operand() {
    if (peek().kind == Tok::Minus) throw ParseError("scalar operand may not start with '-'; use parentheses", peek().pos);
    return unary();
  }

  Term postfix() {
    Term t = atom();
    while (peek().kind == Tok::Caret) {
      const auto pos = next().pos;
      if (peek().kind != Tok::Int) throw ParseError("expected exponent", peek().pos);
      const auto k = to_int(next());
      if (k < 1) throw ParseError("exponent must be >= 1", pos);
      t = check(Term::power(k, std::move(t)), pos);
    }
    return t;
  }

  Term atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        if (t.text.find_first_not_of('0') != std::string::npos)
          throw ParseError("integer '" + t.text + "' must be followed by an operand", t.pos);
        next();
        return Term::zero();
      case Tok::Var: {
        const Token& v = next();
        const auto var = to_var(v);
        return Term::var(var.kind, var.index);
      }
      case Tok::LParen: {
        next();
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End: throw ParseError("unexpected end of input", t.pos);
      default: throw ParseError("unexpected token", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  Signature sig_;
};

// Binding strength, loosest first.
int prec(const Term& t) {
  switch (t.op()) {
    case Op::Join: return 1;
    case Op::Meet: return 2;
    case Op::Plus:
    case Op::Diff: return 3;
    case Op::Times: return 4;
    case Op::Neg:
    case Op::MVNeg:
    case Op::Scalar: return 5;
    case Op::Power: return 6;
    default: return 7;
  }
}

void print_into(std::string& out, const Term& t, const VariableNamer& namer);

void print_child(std::string& out, const Term& child, int min_prec, const VariableNamer& namer) {
  if (prec(child) < min_prec) {
    out += '(';
    print_into(out, child, namer);
    out += ')';
  } else {
    print_into(out, child, namer);
  }
}

const char* infix(Op op) {
  switch (op) {
    case Op::Join: return " \\/ ";
    case Op::Meet: return " /\\ ";
    case Op::Plus: return " + ";
    case Op::Diff: return " -. ";
    case Op::Times: return " * ";
    default: return " ? ";
  }
}

void print_into(std::string& out, const Term& t, const VariableNamer& namer) {
  switch (t.op()) {
    case Op::Zero: out += '0'; return;
    case Op::Var: out += namer(t.variable()); return;
    case Op::Join:
    case Op::Meet:
    case Op::Plus:
    case Op::Diff:
    case Op::Times: {
      // left associative: the right child needs strictly tighter binding
      const int p = prec(t);
      print_child(out, t.left(), p, namer);
      out += infix(t.op());
      print_child(out, t.right(), p + 1, namer);
      return;
    }
    case Op::Neg:
      out += '-';
      // "-3 x" would read back as a negative scalar, and "--" is fine but "-(-3 x)" is clearer
      if (t.operand().op() == Op::Scalar) {
        out += '(';
        print_into(out, t.operand(), namer);
        out += ')';
      } else {
        print_child(out, t.operand(), 5, namer);
      }
      return;
    case Op::MVNeg:
      out += '~';
      print_child(out, t.operand(), 5, namer);
      return;
    case Op::Scalar:
      out += std::to_string(t.coefficient());
      out += ' ';
      if (t.operand().op() == Op::Neg || (t.operand().op() == Op::Scalar && t.operand().coefficient() < 0)) {
        out += '(';
        print_into(out, t.operand(), namer);
        out += ')';
      } else {
        print_child(out, t.operand(), 5, namer);
      }
      return;
    case Op::Power:
      print_child(out, t.operand(), 7, namer);
      out += '^';
      out += std::to_string(t.coefficient());
      return;
  }
}

std::string join_equations(const std::vector<Equation>& eqs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    if (i) out += sep;
    out += print_equation(eqs[i]);
  }
  return out;
}

std::string binder(const char* kw, char letter, int from, int to) {
  std::string out = kw;
  for (int i = from; i <= to; ++i) out += std::string(" ") + letter + std::to_string(i);
  return out;
}

Equation parse_equation(Parser& p) {
  Term l = p.term();
  p.expect(Tok::Eq, "'='");
  Term r = p.term();
  return Equation{std::move(l), std::move(r)};
}

// Reads `x1 .. xn` (or z) and returns n; requires consecutive indices.
int parse_binder(Parser& p, char letter) {
  int count = 0;
  while (p.peek().kind == Tok::Var && p.peek().text[0] == letter) {
    const Token& t = p.next();
    if (to_var(t).index != count + 1)
      throw ParseError(std::string("expected ") + letter + std::to_string(count + 1), t.pos);
    ++count;
  }
  return count;
}

}  // namespace

Term parse_term(std::string_view text, Signature sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.finish();
  return t;
}

EFDSentence parse_sentence(std::string_view text, Signature sig) {
  Parser p(text, sig);
  EFDSentence s;
  s.signature = sig;
  s.n = 0;
  if (p.at_word("forall")) {
    p.next();
    s.n = parse_binder(p, 'x');
  }
  if (!p.at_word("exists!")) throw ParseError("expected 'exists!'", p.peek().pos);
  p.next();
  s.m = parse_binder(p, 'z');
  if (s.m < 1) throw ParseError("expected at least one z variable", p.peek().pos);
  p.expect(Tok::Colon, "':'");
  s.equations.push_back(parse_equation(p));
  while (p.peek().kind == Tok::Amp) {
    p.next();
    s.equations.push_back(parse_equation(p));
  }
  p.finish();
  try {
    s.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
  return s;
}

Identity parse_identity(std::string_view text, Signature sig) {
  Parser p(text, sig);
  Identity id;
  id.signature = sig;
  if (p.at_word("forall")) {
    p.next();
    id.n = parse_binder(p, 'x');
    p.expect(Tok::Colon, "':'");
  }
  id.equation = parse_equation(p);
  p.finish();
  try {
    id.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
  return id;
}

std::string print_term(const Term& t) { return print_term(t, variable_name); }

std::string print_term(const Term& t, const VariableNamer& namer) {
  std::string out;
  print_into(out, t, namer);
  return out;
}

std::string print_equation(const Equation& e) { return print_term(e.lhs) + " = " + print_term(e.rhs); }

std::string print_sentence(const EFDSentence& s) {
  std::string out;
  if (s.n > 0) out = binder("forall", 'x', 1, s.n) + " ";
  out += binder("exists!", 'z', 1, s.m);
  out += " : ";
  out += join_equations(s.equations, " & ");
  return out;
}

std::string print_identity(const Identity& id) {
  std::string out;
  if (id.n > 0) out = binder("forall", 'x', 1, id.n) + " : ";
  return out + print_equation(id.equation);
}

std::string print_quasiidentity(const QuasiIdentity& q) {
  std::string out;
  const bool any = q.n > 0 || q.m > 0;
  if (any) {
    out = "forall";
    for (int i = 1; i <= q.n; ++i) out += " x" + std::to_string(i);
    for (int j = 1; j <= 2 * q.m; ++j) out += " z" + std::to_string(j);
    out += " : ";
  }
  return out + join_equations(q.hypotheses, " & ") + " -> " + join_equations(q.conclusions, " & ");
}

}  // namespace efdkit
