#include <doctest.h>

#include <random>

#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"
#include "efdkit/random_terms.hpp"
#include "efdkit/syntax.hpp"
#include "efdkit/translate.hpp"

using namespace efdkit;

namespace {

Element q1(const Rational& v) { return {v}; }

}  // namespace

TEST_CASE("star on terms") {
  const auto h = [](const char* s) { return parse_term(s, Signature::Hoop); };
  const auto g = [](const char* s) { return parse_term(s, Signature::Group); };
  CHECK(star_term(h("0")) == g("0"));
  CHECK(star_term(h("x1 + z1")) == g("(x1 \\/ -x1) + z1"));
  CHECK(star_term(h("x1 -. x2")) == g("((x1 \\/ -x1) - (x2 \\/ -x2)) \\/ 0"));
}

TEST_CASE("star on sentences") {
  const auto d2 = build_delta_k(2, Signature::Hoop);
  const auto s = star_sentence(d2);
  CHECK(s == parse_sentence("forall x1 exists! z1 : 2 z1 = x1 \\/ -x1 & z1 \\/ 0 = z1", Signature::Group));
  const auto nox = parse_sentence("exists! z1 : z1 + z1 = z1", Signature::Hoop);
  const auto s2 = star_sentence(nox);
  REQUIRE(s2.equations.size() == 2);
  CHECK(s2.equations[0] == nox.equations[0]);
  CHECK_THROWS_AS(star_sentence(build_delta_k(2)), SignatureError);
}

TEST_CASE("star preserves values on the positive cone") {
  std::mt19937_64 rng(9);
  TermGenOptions opt;
  opt.signature = Signature::Hoop;
  opt.x_vars = 2;
  opt.z_vars = 1;
  const auto cone = Algebra::positive_cone(Algebra::rationals());
  const auto q = Algebra::rationals();
  for (int i = 0; i < 100; ++i) {
    const Term t = random_term(rng, opt);
    const Term st = star_term(t);
    for (int j = 0; j < 20; ++j) {
      Assignment env;
      for (const auto& v : std::vector<Variable>{{VarKind::X, 1}, {VarKind::X, 2}, {VarKind::Z, 1}})
        env[v] = random_element(cone, rng);
      CHECK(eval(cone, t, env) == eval(q, st, env));
    }
  }
}

TEST_CASE("delta_k and its star agree on Q_S") {
  for (std::int64_t k : {1, 2, 3, 4, 6}) {
    for (const std::vector<std::int64_t>& s : {std::vector<std::int64_t>{}, {2}, {3}, {2, 3}}) {
      const auto a = Algebra::localized(s);
      const auto v = check_sentence_sampled(a, star_sentence(build_delta_k(k, Signature::Hoop)), 60);
      CHECK(v.confidence == "exact");
      CHECK((v.status == Verdict::Status::Consistent) == holds_delta_exact(a, k));
    }
  }
}

TEST_CASE("check in 2") {
  auto tc = check_in_two(build_epsilon_k(2));
  CHECK(tc.holds);
  CHECK(tc.witness.at({0}) == Bits{0});
  CHECK(tc.witness.at({1}) == Bits{1});

  tc = check_in_two(parse_sentence("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::MV));
  CHECK_FALSE(tc.holds);
  CHECK(*tc.failing == Bits{0});
  CHECK(tc.reason == "no-solution");

  tc = check_in_two(parse_sentence("exists! z1 : z1 = ~0", Signature::MV));
  CHECK(tc.holds);
  CHECK(tc.witness.size() == 1);
  CHECK(tc.witness.at({}) == Bits{1});
}

TEST_CASE("decomposition shape") {
  const auto parts = phi_rad_decompose(build_epsilon_k(2));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].sign == Bits{0});
  CHECK(parts[1].sign == Bits{1});
  // 2 equations on the left (rho, alpha) times 2 on the right (rho~, z = 0)
  CHECK(parts[0].sentence.equations.size() == 4);
  const auto three = phi_rad_decompose(parse_sentence("forall x1 x2 x3 exists! z1 : z1 = x1 + x2 + x3", Signature::MV));
  CHECK(three.size() == 8);
  CHECK_THROWS_AS(phi_rad_decompose(parse_sentence("forall x1 exists! z1 : z1 = x1 & z1 = ~x1", Signature::MV)),
                  FragmentError);
}

TEST_CASE("decomposition outputs hold in Gamma(Z x Q) like epsilon_2") {
  const auto g = Algebra::gamma(Algebra::rationals());
  for (const auto& r : phi_rad_decompose(build_epsilon_k(2))) {
    CHECK(check_sentence_sampled(g, r.sentence, 150).status == Verdict::Status::Consistent);
  }
  // non-radical x: z = 0 is the unique solution
  std::mt19937_64 rng(2);
  for (const auto& r : phi_rad_decompose(build_epsilon_k(3))) {
    for (int i = 0; i < 40; ++i) {
      const Element a = random_radical(g, rng, true);
      if (radical_member(g, a)) continue;
      const auto sr = solve_at(g, r.sentence, {a});
      CHECK(sr.count == 1);
      REQUIRE_FALSE(sr.solutions.empty());
      CHECK(sr.solutions[0][0] == g.zero());
    }
  }
}

TEST_CASE("mv to hoop") {
  const auto plain = parse_sentence("forall x1 exists! z1 : z1 -. x1 = 0", Signature::MV);
  const auto h = mv_to_hoop(plain);
  CHECK(h == parse_sentence("forall x1 exists! z1 : z1 -. x1 = 0", Signature::Hoop));

  for (std::int64_t k : {1, 2, 3, 5}) {
    for (const auto& r : phi_rad_decompose(build_epsilon_k(k))) {
      const auto hoop = mv_to_hoop(r);
      const Term kz = k == 1 ? Term::z(1) : Term::scalar(k, Term::z(1));
      const Equation& first = hoop.equations.front();
      CHECK(((first.lhs == kz && first.rhs == Term::x(1)) || (first.rhs == kz && first.lhs == Term::x(1))));
      CHECK(classify_group_sentences({star_sentence(hoop)}) == AEClass::divisible(Family::G, PrimeSet::of_integer(k)));
    }
  }
  CHECK_THROWS_AS(mv_to_hoop(parse_sentence("forall x1 exists! z1 : z1 = ~x1", Signature::MV)), FragmentError);
}

TEST_CASE("mv to hoop agrees with the MV equations on radical samples") {
  const auto g = Algebra::gamma(Algebra::rationals());
  const auto cone = Algebra::positive_cone(Algebra::rationals());
  std::mt19937_64 rng(31);
  for (std::int64_t k : {2, 3}) {
    for (const auto& r : phi_rad_decompose(build_epsilon_k(k))) {
      const auto hoop = mv_to_hoop(r);
      for (int i = 0; i < 300; ++i) {
        const Element a = random_radical(g, rng), b = i % 3 ? random_radical(g, rng) : Element{Rational(0), a[1] / k};
        const Assignment mv_env{{{VarKind::X, 1}, a}, {{VarKind::Z, 1}, b}};
        const Assignment hoop_env{{{VarKind::X, 1}, q1(a[1])}, {{VarKind::Z, 1}, q1(b[1])}};
        bool mv_ok = true, hoop_ok = true;
        for (const auto& eq : r.sentence.equations) mv_ok = mv_ok && holds(g, eq, mv_env);
        for (const auto& eq : hoop.equations) hoop_ok = hoop_ok && holds(cone, eq, hoop_env);
        CHECK(mv_ok == hoop_ok);
      }
    }
  }
}

TEST_CASE("MV classification") {
  CHECK(classify_mv_sentences({build_epsilon_k(2), build_epsilon_k(3)}) ==
        AEClass::divisible(Family::P, PrimeSet::finite({2, 3})));
  CHECK(classify_mv_sentences({boolean_marker_sentence()}) == AEClass::boolean());
  CHECK(classify_mv_sentences({}) == AEClass::divisible(Family::P, {}));
  for (std::int64_t k = 1; k <= 12; ++k)
    CHECK(classify_mv_sentences({build_epsilon_k(k)}) == AEClass::divisible(Family::P, PrimeSet::of_integer(k)));

  const auto via_pipeline = parse_sentence("forall x1 exists! z1 : x1 + x1 = x1 & z1 = x1", Signature::MV);
  const auto d = classify_mv_sentences_detailed({via_pipeline});
  CHECK(d.cls == AEClass::boolean());
  CHECK_FALSE(d.sentences[0].boolean_marker);

  const auto out = classify_mv_sentences_detailed({absurd_sentence(Signature::MV), build_epsilon_k(2)});
  CHECK(out.per_paper_scope);
  CHECK(out.cls.kind == AEClass::Kind::Trivial);
}
