#include <algorithm>
#include <cctype>

#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"

namespace efdkit {

namespace {

bool denominator_supported(const Rational& q, const std::vector<std::int64_t>& primes) {
  mpz_class d = q.get_den();
  for (auto p : primes) {
    const mpz_class pp(static_cast<long>(p));
    while (d % pp == 0) d /= pp;
  }
  return d == 1;
}

int lex_sign(const Element& e) {
  for (const auto& c : e) {
    if (c > 0) return 1;
    if (c < 0) return -1;
  }
  return 0;
}

}  // namespace

Algebra Algebra::integers() {
  Algebra a;
  a.kind_ = Kind::Integer;
  return a;
}

Algebra Algebra::rationals() {
  Algebra a;
  a.kind_ = Kind::Rational;
  return a;
}

Algebra Algebra::localized(std::vector<std::int64_t> primes) {
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (auto p : primes)
    if (!is_prime(p)) throw InvalidArgument("Q_S needs primes, got " + std::to_string(p));
  Algebra a;
  a.kind_ = Kind::Localized;
  a.primes_ = std::move(primes);
  return a;
}

Algebra Algebra::lex(const Algebra& right) {
  if (!right.is_group()) throw InvalidArgument("lex product needs a group on the right");
  Algebra a;
  a.kind_ = Kind::Lex;
  a.inner_ = std::make_shared<const Algebra>(right);
  return a;
}

Algebra Algebra::positive_cone(const Algebra& group) {
  if (!group.is_group()) throw InvalidArgument("positive cone of a non-group");
  Algebra a;
  a.kind_ = Kind::PositiveCone;
  a.inner_ = std::make_shared<const Algebra>(group);
  return a;
}

Algebra Algebra::gamma(const Algebra& group) {
  if (!group.is_group()) throw InvalidArgument("gamma of a non-group");
  Algebra a;
  a.kind_ = Kind::Gamma;
  a.inner_ = std::make_shared<const Algebra>(group);
  return a;
}

Algebra Algebra::two() {
  Algebra a;
  a.kind_ = Kind::Two;
  return a;
}

Algebra Algebra::trivial(Signature sig) {
  Algebra a;
  a.kind_ = Kind::Trivial;
  a.trivial_sig_ = sig;
  return a;
}

Signature Algebra::species() const noexcept {
  switch (kind_) {
    case Kind::PositiveCone: return Signature::Hoop;
    case Kind::Gamma:
    case Kind::Two: return Signature::MV;
    case Kind::Trivial: return trivial_sig_;
    default: return Signature::Group;
  }
}

bool Algebra::is_group() const noexcept {
  return kind_ == Kind::Integer || kind_ == Kind::Rational || kind_ == Kind::Localized || kind_ == Kind::Lex;
}

std::size_t Algebra::width() const noexcept {
  switch (kind_) {
    case Kind::Lex:
    case Kind::Gamma: return 1 + inner_->width();
    case Kind::PositiveCone: return inner_->width();
    case Kind::Trivial: return 0;
    default: return 1;
  }
}

const Algebra& Algebra::inner() const {
  if (!inner_) throw InvalidArgument(describe() + " has no inner group");
  return *inner_;
}

bool Algebra::contains(const Element& e) const {
  if (e.size() != width()) return false;
  switch (kind_) {
    case Kind::Integer: return e[0].get_den() == 1;
    case Kind::Rational: return true;
    case Kind::Localized: return denominator_supported(e[0], primes_);
    case Kind::Lex: return e[0].get_den() == 1 && inner_->contains(Element(e.begin() + 1, e.end()));
    case Kind::PositiveCone: return inner_->contains(e) && lex_sign(e) >= 0;
    case Kind::Gamma: {
      Element g(e.begin() + 1, e.end());
      if (!inner_->contains(g)) return false;
      if (e[0] == 0) return lex_sign(g) >= 0;
      if (e[0] == 1) return lex_sign(g) <= 0;
      return false;
    }
    case Kind::Two: return e[0] == 0 || e[0] == 1;
    case Kind::Trivial: return true;
  }
  return false;
}

void Algebra::require_contains(const Element& e) const {
  if (!contains(e)) throw UniverseError(to_string(e) + " is not an element of " + describe());
}

Element Algebra::zero() const { return Element(width(), Rational(0)); }

Element Algebra::unit() const {
  if (species() != Signature::MV) throw SignatureError(describe() + " has no MV unit");
  Element u = zero();
  if (!u.empty()) u[0] = 1;
  return u;
}

std::string Algebra::describe() const {
  switch (kind_) {
    case Kind::Integer: return "z";
    case Kind::Rational: return "q";
    case Kind::Localized: {
      std::string s = "qs:";
      for (std::size_t i = 0; i < primes_.size(); ++i) s += (i ? "," : "") + std::to_string(primes_[i]);
      return s;
    }
    case Kind::Lex: return "lex(z," + inner_->describe() + ")";
    case Kind::PositiveCone: return "pos(" + inner_->describe() + ")";
    case Kind::Gamma: return "gamma(" + inner_->describe() + ")";
    case Kind::Two: return "two";
    case Kind::Trivial: return "trivial:" + std::string(to_string(trivial_sig_));
  }
  return "?";
}

namespace {

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view s) : s_(s) {}

  Algebra parse_all() {
    Algebra a = parse();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return a;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(std::string_view w) {
    skip();
    if (s_.substr(i_, w.size()) == w) {
      i_ += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("model descriptor: " + what, i_);
  }
  void expect(std::string_view w) {
    if (!eat(w)) fail("expected '" + std::string(w) + "'");
  }

  Algebra parse() {
    if (eat("lex(")) {
      expect("z");
      expect(",");
      Algebra r = parse();
      expect(")");
      return Algebra::lex(r);
    }
    if (eat("pos(")) {
      Algebra g = parse();
      expect(")");
      return Algebra::positive_cone(g);
    }
    if (eat("gamma(")) {
      Algebra g = parse();
      expect(")");
      return Algebra::gamma(g);
    }
    if (eat("two")) return Algebra::two();
    if (eat("trivial:")) {
      skip();
      std::size_t j = i_;
      while (j < s_.size() && std::isalpha(static_cast<unsigned char>(s_[j]))) ++j;
      const auto name = s_.substr(i_, j - i_);
      i_ = j;
      return Algebra::trivial(signature_from_string(name));
    }
    if (eat("qs:")) {
      std::vector<std::int64_t> primes;
      for (;;) {
        skip();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) break;
        primes.push_back(std::stoll(std::string(s_.substr(i_, j - i_))));
        i_ = j;
        skip();
        // a comma followed by a digit continues the list
        if (i_ < s_.size() && s_[i_] == ',') {
          std::size_t k = i_ + 1;
          while (k < s_.size() && s_[k] == ' ') ++k;
          if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
            i_ = k;
            continue;
          }
        }
        break;
      }
      return Algebra::localized(primes);
    }
    if (eat("q")) return Algebra::rationals();
    if (eat("z")) return Algebra::integers();
    fail("unknown model");
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Algebra Algebra::parse(std::string_view text) { return DescriptorParser(text).parse_all(); }

Element parse_element(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string x) {
    const auto b = x.find_first_not_of(" \t");
    const auto e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  s = trim(s);
  if (s.empty()) throw ParseError("empty element literal", 0);
  Element out;
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError("unclosed element tuple", s.size());
    const std::string body = s.substr(1, s.size() - 2);
    if (trim(body).empty()) return out;
    std::size_t start = 0;
    for (;;) {
      const auto comma = body.find(',', start);
      const auto part = trim(body.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
      try {
        out.push_back(parse_rational(part));
      } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), start + 1);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  }
  try {
    out.push_back(parse_rational(s));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), 0);
  }
  return out;
}

std::string to_string(const Element& e) {
  if (e.size() == 1) return e[0].get_str();
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ", ";
    out += e[i].get_str();
  }
  return out + ")";
}

bool holds_delta_exact(const Algebra& a, std::int64_t k) {
  if (k < 1) throw InvalidArgument("delta_k needs k >= 1");
  switch (a.kind()) {
    case Algebra::Kind::Rational: return true;
    case Algebra::Kind::Integer: return k == 1;
    case Algebra::Kind::Localized: {
      for (auto p : prime_factors(k))
        if (!std::binary_search(a.primes().begin(), a.primes().end(), p)) return false;
      return true;
    }
    case Algebra::Kind::Lex: return k == 1;
    case Algebra::Kind::PositiveCone: return holds_delta_exact(a.inner(), k);
    case Algebra::Kind::Trivial: return true;
    default: throw InvalidArgument("no exact delta_k decision for " + a.describe());
  }
}

bool holds_epsilon_exact(const Algebra& a, std::int64_t k) {
  if (k < 1) throw InvalidArgument("epsilon_k needs k >= 1");
  switch (a.kind()) {
    case Algebra::Kind::Gamma: return holds_delta_exact(a.inner(), k);
    case Algebra::Kind::Two:
    case Algebra::Kind::Trivial: return true;
    default: throw InvalidArgument("no exact epsilon_k decision for " + a.describe());
  }
}

std::optional<Element> d_k(const Algebra& a, const Element& e, std::int64_t k) {
  if (k < 1) throw InvalidArgument("d_k needs k >= 1");
  a.require_contains(e);
  if (a.kind() == Algebra::Kind::Two || a.kind() == Algebra::Kind::Trivial) return e;
  if (a.kind() != Algebra::Kind::Gamma) throw InvalidArgument("d_k is defined on Gamma models");
  Element r = e;
  for (std::size_t i = 1; i < r.size(); ++i) r[i] /= Rational(static_cast<long>(k));
  if (!a.contains(r)) return std::nullopt;
  return r;
}

namespace {

Rational random_rational(const Algebra& g, std::mt19937_64& rng, std::int64_t cap) {
  std::uniform_int_distribution<std::int64_t> num(-cap, cap);
  const std::int64_t n = num(rng);
  std::int64_t d = 1;
  switch (g.kind()) {
    case Algebra::Kind::Rational: d = std::uniform_int_distribution<std::int64_t>(1, cap)(rng); break;
    case Algebra::Kind::Localized: {
      if (g.primes().empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, g.primes().size() - 1);
      const int steps = std::uniform_int_distribution<int>(0, 3)(rng);
      for (int s = 0; s < steps; ++s) {
        const auto p = g.primes()[pick(rng)];
        if (d * p > cap) break;
        d *= p;
      }
      break;
    }
    default: break;
  }
  return Rational(static_cast<long>(n), static_cast<unsigned long>(d));
}

Element random_group_element(const Algebra& g, std::mt19937_64& rng, std::int64_t cap) {
  if (g.kind() == Algebra::Kind::Lex) {
    Element e{Rational(std::uniform_int_distribution<long>(-2, 2)(rng))};
    auto rest = random_group_element(g.inner(), rng, cap);
    e.insert(e.end(), rest.begin(), rest.end());
    return e;
  }
  Element e{random_rational(g, rng, cap)};
  e[0].canonicalize();
  return e;
}

void make_sign(Element& g, int wanted) {
  if (lex_sign(g) * wanted < 0)
    for (auto& c : g) c = -c;
}

}  // namespace

Element random_element(const Algebra& a, std::mt19937_64& rng, std::int64_t cap) {
  switch (a.kind()) {
    case Algebra::Kind::Two: return Element{Rational(std::uniform_int_distribution<int>(0, 1)(rng))};
    case Algebra::Kind::Trivial: return {};
    case Algebra::Kind::PositiveCone: {
      auto g = random_group_element(a.inner(), rng, cap);
      make_sign(g, 1);
      return g;
    }
    case Algebra::Kind::Gamma: return random_radical(a, rng, std::uniform_int_distribution<int>(0, 1)(rng) == 1, cap);
    default: return random_group_element(a, rng, cap);
  }
}

Element random_radical(const Algebra& a, std::mt19937_64& rng, bool coradical, std::int64_t cap) {
  if (a.kind() == Algebra::Kind::Two) return Element{Rational(coradical ? 1 : 0)};
  if (a.kind() != Algebra::Kind::Gamma) throw InvalidArgument("radical sampling needs a Gamma model");
  auto g = random_group_element(a.inner(), rng, cap);
  make_sign(g, coradical ? -1 : 1);
  Element e{Rational(coradical ? 1 : 0)};
  e.insert(e.end(), g.begin(), g.end());
  return e;
}

std::vector<Element> structured_elements(const Algebra& a) {
  std::vector<Element> cands;
  const std::size_t w = a.width();
  auto push = [&](Element e) {
    if (a.contains(e) && std::find(cands.begin(), cands.end(), e) == cands.end()) cands.push_back(std::move(e));
  };
  if (w == 0) {
    push({});
    return cands;
  }
  const std::vector<Rational> vals{Rational(0), Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2),
                                   Rational(2), Rational(1, 3), Rational(-3), Rational(3, 5)};
  if (w == 1) {
    for (const auto& v : vals) push({v});
    return cands;
  }
  // tuples: vary the first and last coordinate
  for (int lead : {0, 1, -1}) {
    for (const auto& v : vals) {
      Element e(w, Rational(0));
      e[0] = lead;
      e[w - 1] = v;
      push(e);
    }
  }
  return cands;
}

std::string to_string(Verdict::Status s) {
  switch (s) {
    case Verdict::Status::Consistent: return "consistent-on-sample";
    case Verdict::Status::Falsified: return "falsified";
    case Verdict::Status::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace efdkit
