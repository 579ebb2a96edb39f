#include <doctest.h>

#include <random>

#include "efdkit/errors.hpp"
#include "efdkit/random_terms.hpp"
#include "efdkit/syntax.hpp"

using namespace efdkit;

TEST_CASE("parse: join with group negation") {
  const Term t = parse_term("x1 \\/ -x1", Signature::Group);
  CHECK(t == Term::join(Term::x(1), Term::neg(Term::x(1))));
}

TEST_CASE("parse: hoop monus") {
  CHECK(parse_term("z1 -. x1", Signature::Hoop) == Term::diff(Term::z(1), Term::x(1)));
}

TEST_CASE("parse: t_2 literal matches the builder") {
  CHECK(parse_term("(2 z1 /\\ ~(2 z1^2)) \\/ z1^2", Signature::MV) == build_t_k(2));
}

TEST_CASE("t_1 uses bare z for both kz and z^k") {
  const Term t = build_t_k(1);
  CHECK(print_term(t) == "z1 /\\ ~2 z1^2 \\/ z1");
  CHECK_THROWS_AS(build_t_k(0), InvalidArgument);
}

TEST_CASE("parse: precedence and associativity") {
  CHECK(parse_term("x1 + x2 + x3", Signature::Group) ==
        Term::plus(Term::plus(Term::x(1), Term::x(2)), Term::x(3)));
  CHECK(parse_term("x1 - x2", Signature::Group) == Term::plus(Term::x(1), Term::neg(Term::x(2))));
  CHECK(parse_term("-3 x1", Signature::Group) == Term::scalar(-3, Term::x(1)));
  CHECK(parse_term("-(3 x1)", Signature::Group) == Term::neg(Term::scalar(3, Term::x(1))));
  CHECK(parse_term("2 x1^3", Signature::MV) == Term::scalar(2, Term::power(3, Term::x(1))));
  CHECK(parse_term("x1 * x2 + x3", Signature::MV) ==
        Term::plus(Term::times(Term::x(1), Term::x(2)), Term::x(3)));
  CHECK(parse_term("0", Signature::Hoop) == Term::zero());
}

TEST_CASE("parse: errors carry positions") {
  try {
    parse_term("x1 /\\ x2", Signature::Hoop);
    FAIL("expected a signature violation");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_term("x1 +", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_term("x1 $ x2", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_term("3", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_term("x0", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_term("x1 - x2", Signature::Hoop), ParseError);
  CHECK_THROWS_AS(parse_term("~x1", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_term("2 -x1", Signature::Group), ParseError);
}

TEST_CASE("print/parse round trip on random terms") {
  for (auto sig : {Signature::Group, Signature::Hoop, Signature::MV}) {
    std::mt19937_64 rng(99 + static_cast<int>(sig));
    TermGenOptions opt;
    opt.signature = sig;
    opt.z_vars = 2;
    for (int i = 0; i < 1000; ++i) {
      const Term t = random_term(rng, opt);
      REQUIRE(admits(sig, t));
      const auto text = print_term(t);
      INFO(text);
      CHECK(parse_term(text, sig) == t);
    }
  }
}

TEST_CASE("expand_macros") {
  const Term a = Term::x(1), b = Term::x(2);
  CHECK(expand_macros(Term::join(a, b), Signature::MV) ==
        Term::plus(Term::mv_neg(Term::plus(Term::mv_neg(a), b)), b));
  CHECK(expand_macros(Term::scalar(1, a), Signature::Group) == a);
  CHECK(expand_macros(Term::scalar(3, a), Signature::Group) == Term::plus(a, Term::plus(a, a)));
  CHECK(expand_macros(Term::scalar(0, a), Signature::Group) == Term::zero());
  CHECK(expand_macros(Term::scalar(-2, a), Signature::Group) == Term::neg(Term::plus(a, a)));

  std::mt19937_64 rng(5);
  TermGenOptions opt;
  opt.signature = Signature::MV;
  for (int i = 0; i < 200; ++i) {
    const Term t = random_term(rng, opt);
    const Term e = expand_macros(t, Signature::MV);
    CHECK(expand_macros(e, Signature::MV) == e);
    CHECK(!mentions_kind(e, VarKind::Z));
  }
}

TEST_CASE("sentences") {
  const auto d2 = build_delta_k(2);
  CHECK(print_sentence(d2) == "forall x1 exists! z1 : 2 z1 = x1");
  CHECK(parse_sentence("forall x1 exists! z1 : 2 z1 = x1", Signature::Group) == d2);
  const auto e3 = build_epsilon_k(3);
  CHECK(e3.equations.size() == 1);
  CHECK(e3.equations[0].lhs == build_t_k(3));
  CHECK_THROWS_AS(build_delta_k(0), InvalidArgument);
  CHECK_THROWS_AS(parse_sentence("forall x1 exists! z1 : z2 = x1", Signature::Group), ParseError);
  CHECK_THROWS_AS(parse_sentence("forall x1 : x1 = x1", Signature::Group), ParseError);

  const auto multi = parse_sentence("exists! z1 z2 : z1 = 0 & z2 = z1", Signature::Hoop);
  CHECK(multi.n == 0);
  CHECK(multi.m == 2);
  CHECK(multi.equations.size() == 2);
}

TEST_CASE("uniqueness quasi-identity of delta_2") {
  const auto q = uniqueness_quasiidentity(build_delta_k(2));
  CHECK(print_quasiidentity(q) == "forall x1 z1 z2 : 2 z1 = x1 & 2 z2 = x1 -> z1 = z2");
  REQUIRE(q.hypotheses.size() == 2);
  REQUIRE(q.conclusions.size() == 1);
}

TEST_CASE("identities") {
  const auto id = parse_identity("forall x1 : 2 x1 = x1", Signature::MV);
  CHECK(id == boolean_identity());
  const auto s = identity_as_sentence(id);
  CHECK(s.m == 1);
  CHECK(s.equations.size() == 2);
}
