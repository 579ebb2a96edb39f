#include <doctest.h>

#include <random>

#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"
#include "efdkit/random_terms.hpp"
#include "efdkit/syntax.hpp"

using namespace efdkit;

namespace {

const Variable X1{VarKind::X, 1};
const Variable X2{VarKind::X, 2};
const Variable Z1{VarKind::Z, 1};

Element el(long i, long num, long den = 1) { return {Rational(i), Rational(num, den)}; }

// Oracle for Gamma(Z x Q): pairs compared with std::pair's lexicographic order.
using P = std::pair<Rational, Rational>;
P oracle_plus(P a, P b) {
  P s{a.first + b.first, a.second + b.second};
  const P u{Rational(1), Rational(0)};
  return s < u ? s : u;
}

bool oracle_denominator_in(const Rational& q, const std::vector<long>& primes) {
  mpz_class d = q.get_den();
  for (long p = 2; d > 1 && p <= 1000; ++p) {
    if (d % p != 0) continue;
    if (std::find(primes.begin(), primes.end(), p) == primes.end()) return false;
    while (d % p == 0) d /= p;
  }
  return d == 1;
}

}  // namespace

TEST_CASE("Gamma arithmetic") {
  const auto g = Algebra::gamma(Algebra::rationals());
  CHECK(eval(g, parse_term("~x1", Signature::MV), {{X1, el(0, 1, 2)}}) == el(1, -1, 2));
  const Element sum = eval(g, parse_term("x1 + x2", Signature::MV), {{X1, el(1, -1)}, {X2, el(0, 2)}});
  CHECK(sum == el(1, 0));
  const P o = oracle_plus({Rational(1), Rational(-1)}, {Rational(0), Rational(2)});
  CHECK(sum == Element{o.first, o.second});
  CHECK(eval(g, build_t_k(3), {{Z1, el(0, 1, 2)}}) == el(0, 3, 2));
  CHECK_THROWS_AS(eval(g, parse_term("x1", Signature::MV), {{X1, el(0, -1)}}), UniverseError);
  CHECK_THROWS_AS(eval(g, parse_term("-x1", Signature::Group), {{X1, el(0, 1)}}), SignatureError);
}

TEST_CASE("Gamma sums agree with the pair oracle") {
  const auto g = Algebra::gamma(Algebra::rationals());
  std::mt19937_64 rng(3);
  const Term plus = parse_term("x1 + x2", Signature::MV);
  for (int i = 0; i < 300; ++i) {
    const Element a = random_element(g, rng), b = random_element(g, rng);
    const P o = oracle_plus({a[0], a[1]}, {b[0], b[1]});
    CHECK(eval(g, plus, {{X1, a}, {X2, b}}) == Element{o.first, o.second});
  }
}

TEST_CASE("t_k on the two-element algebra") {
  const auto two = Algebra::two();
  for (long k = 1; k <= 3; ++k) {
    for (long v = 0; v <= 1; ++v) CHECK(eval(two, build_t_k(k), {{Z1, {Rational(v)}}}) == Element{Rational(v)});
  }
}

TEST_CASE("U(epsilon_2) holds in 2 by exhaustion") {
  const auto two = Algebra::two();
  const auto q = uniqueness_quasiidentity(build_epsilon_k(2));
  int checked = 0;
  for (int bits = 0; bits < 8; ++bits) {
    Assignment env{{X1, {Rational(bits & 1)}},
                   {Variable{VarKind::Z, 1}, {Rational((bits >> 1) & 1)}},
                   {Variable{VarKind::Z, 2}, {Rational((bits >> 2) & 1)}}};
    bool hyp = true;
    for (const auto& h : q.hypotheses) hyp = hyp && eval(two, h.lhs, env) == eval(two, h.rhs, env);
    bool concl = true;
    for (const auto& c : q.conclusions) concl = concl && eval(two, c.lhs, env) == eval(two, c.rhs, env);
    CHECK((!hyp || concl));
    ++checked;
  }
  CHECK(checked == 8);
}

TEST_CASE("radical membership") {
  const auto g = Algebra::gamma(Algebra::rationals());
  CHECK(radical_member(g, el(0, 7, 3)));
  // oracle: a*a = ~(~a + ~a) with ~a = (1,0) - a, computed on pairs
  const P a{Rational(0), Rational(7, 3)};
  const P na{Rational(1) - a.first, -a.second};
  const P s = oracle_plus(na, na);
  CHECK(P{Rational(1) - s.first, -s.second} == P{Rational(0), Rational(0)});
  CHECK_FALSE(radical_member(g, el(1, 0)));
  CHECK(radical_member(g, el(0, 0)));
  CHECK_FALSE(radical_member(Algebra::two(), {Rational(1)}));
}

TEST_CASE("t_k is k-fold sum on the radical and k-th power on the co-radical") {
  const auto g = Algebra::gamma(Algebra::localized({2, 3}));
  std::mt19937_64 rng(11);
  for (long k = 1; k <= 5; ++k) {
    const Term kz = Term::scalar(k, Term::z(1));
    const Term zk = Term::power(k, Term::z(1));
    for (int i = 0; i < 50; ++i) {
      const Element r = random_radical(g, rng, false);
      const Element c = random_radical(g, rng, true);
      CHECK(eval(g, build_t_k(k), {{Z1, r}}) == eval(g, kz, {{Z1, r}}));
      CHECK(eval(g, build_t_k(k), {{Z1, c}}) == eval(g, zk, {{Z1, c}}));
    }
  }
}

TEST_CASE("expand_macros preserves values") {
  std::mt19937_64 rng(8);
  TermGenOptions opt;
  opt.signature = Signature::MV;
  opt.x_vars = 2;
  for (const auto& a : {Algebra::gamma(Algebra::rationals()), Algebra::two(), Algebra::gamma(Algebra::integers())}) {
    for (int i = 0; i < 150; ++i) {
      const Term t = random_term(rng, opt);
      const Assignment env{{X1, random_element(a, rng)}, {X2, random_element(a, rng)}};
      CHECK(eval(a, t, env) == eval(a, expand_macros(t, Signature::MV), env));
    }
  }
  opt.signature = Signature::Group;
  const auto q = Algebra::rationals();
  for (int i = 0; i < 150; ++i) {
    const Term t = random_term(rng, opt);
    const Assignment env{{X1, random_element(q, rng)}, {X2, random_element(q, rng)}, {Variable{VarKind::X, 3}, random_element(q, rng)}};
    CHECK(eval(q, t, env) == eval(q, expand_macros(t, Signature::Group), env));
  }
}

TEST_CASE("exact delta_k decisions") {
  CHECK_FALSE(holds_delta_exact(Algebra::integers(), 2));
  CHECK(holds_delta_exact(Algebra::integers(), 1));
  for (long k = 1; k <= 12; ++k) CHECK(holds_delta_exact(Algebra::rationals(), k));
  CHECK(holds_delta_exact(Algebra::localized({2, 3}), 6));
  CHECK_FALSE(holds_delta_exact(Algebra::localized({2}), 6));
  // oracle: 1/k lies in Q_S iff its reduced denominator is supported on S
  for (const std::vector<long>& s : {std::vector<long>{}, {2}, {3}, {2, 3}, {2, 5}}) {
    const auto a = Algebra::localized(std::vector<std::int64_t>(s.begin(), s.end()));
    for (long k = 1; k <= 30; ++k) CHECK(holds_delta_exact(a, k) == oracle_denominator_in(Rational(1, k), s));
  }
}

TEST_CASE("exact epsilon_k decisions") {
  const auto g2 = Algebra::gamma(Algebra::localized({2}));
  CHECK(holds_epsilon_exact(g2, 2));
  CHECK_FALSE(holds_epsilon_exact(g2, 3));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const Element a = random_element(g2, rng);
    const Element t = eval(g2, build_t_k(2), {{Z1, a}});
    const auto back = d_k(g2, t, 2);
    REQUIRE(back);
    CHECK(*back == a);
  }
  for (long k = 1; k <= 12; ++k) CHECK(holds_epsilon_exact(Algebra::gamma(Algebra::rationals()), k));
  for (long p : {2, 3, 5, 7}) CHECK(holds_epsilon_exact(Algebra::two(), p));
  CHECK_THROWS_AS(holds_epsilon_exact(Algebra::rationals(), 2), InvalidArgument);
}

TEST_CASE("sampled sentence checks") {
  const auto d2 = build_delta_k(2);
  auto v = check_sentence_sampled(Algebra::integers(), d2);
  CHECK(v.status == Verdict::Status::Falsified);
  CHECK(v.reason == "no-solution");
  CHECK(v.witness.at(X1) == Element{Rational(1)});

  auto q = check_sentence_sampled(Algebra::rationals(), d2, 200);
  CHECK(q.status == Verdict::Status::Consistent);
  CHECK(q.confidence == "exact");

  const auto gq = Algebra::gamma(Algebra::rationals());
  CHECK(check_uniqueness_sampled(gq, build_epsilon_k(2)).status == Verdict::Status::Consistent);
  CHECK(check_sentence_sampled(gq, build_epsilon_k(3), 200).status == Verdict::Status::Consistent);
  CHECK(check_sentence_sampled(Algebra::gamma(Algebra::localized({2})), build_epsilon_k(3), 200).status ==
        Verdict::Status::Falsified);

  for (auto sig : {Signature::Group, Signature::MV}) {
    const auto phi = sig == Signature::Group ? d2 : build_epsilon_k(5);
    CHECK(check_sentence_sampled(Algebra::trivial(sig), phi).status == Verdict::Status::Consistent);
  }
  for (const auto& a : {Algebra::integers(), Algebra::rationals(), Algebra::localized({3}), Algebra::lex(Algebra::rationals())})
    CHECK(check_sentence_sampled(a, build_delta_k(1), 100).status == Verdict::Status::Consistent);

  // non-uniqueness: z1 /\ 0 = 0 has every z >= 0 as a solution
  const auto loose = parse_sentence("forall x1 exists! z1 : z1 /\\ 0 = 0", Signature::Group);
  auto nu = check_sentence_sampled(Algebra::integers(), loose, 10);
  CHECK(nu.status == Verdict::Status::Falsified);
  CHECK(nu.reason == "non-unique");
}

TEST_CASE("boolean identity") {
  CHECK(check_identity_sampled(Algebra::two(), boolean_identity()).status == Verdict::Status::Consistent);
  CHECK(check_identity_sampled(Algebra::gamma(Algebra::rationals()), boolean_identity()).status ==
        Verdict::Status::Falsified);
}

TEST_CASE("descriptors") {
  for (const char* d : {"z", "q", "qs:2,3", "qs:", "lex(z,qs:2)", "gamma(qs:2,3)", "two", "pos(q)", "trivial:group",
                        "gamma(lex(z,q))"}) {
    CHECK(Algebra::parse(d).describe() == d);
  }
  CHECK(Algebra::parse("lex(z, qs:2, 3)").describe() == "lex(z,qs:2,3)");
  CHECK_THROWS_AS(Algebra::parse("gamma(two)"), InvalidArgument);
  CHECK_THROWS_AS(Algebra::parse("r"), ParseError);
  CHECK(parse_element("(1, -1/2)") == el(1, -1, 2));
  CHECK(parse_element("4/6") == Element{Rational(2, 3)});
  CHECK(to_string(el(0, 3, 2)) == "(0, 3/2)");
}
