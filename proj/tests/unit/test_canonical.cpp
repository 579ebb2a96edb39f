#include <doctest.h>

#include <random>

#include "efdkit/canonical.hpp"
#include "efdkit/errors.hpp"
#include "efdkit/models.hpp"
#include "efdkit/random_terms.hpp"
#include "efdkit/syntax.hpp"

using namespace efdkit;

namespace {

Rational frac(long n, long d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Term g(const char* s) { return parse_term(s, Signature::Group); }

Rational eval_q(const Term& t, const RationalVector& x) {
  Assignment env;
  for (std::size_t i = 0; i < x.size(); ++i) env[Variable{VarKind::X, static_cast<int>(i + 1)}] = {x[i]};
  return eval(Algebra::rationals(), t, env)[0];
}

// Integer points suffice by homogeneity: delta_{k,t} fails in Q_S iff some
// integer point has t(x)/k outside Q_S.
bool delta_kt_oracle(std::int64_t k, const Term& t, int n, const std::vector<std::int64_t>& s) {
  const auto qs = Algebra::localized(s);
  const int r = n <= 2 ? 6 : 3;
  std::vector<int> x(static_cast<std::size_t>(n), -r);
  while (true) {
    RationalVector pt;
    for (int v : x) pt.push_back(Rational(v));
    if (!qs.contains({eval_q(t, pt) / Rational(static_cast<long>(k))})) return false;
    std::size_t i = 0;
    while (i < x.size() && x[i] == r) x[i++] = -r;
    if (i == x.size()) break;
    ++x[i];
  }
  return true;
}

}  // namespace

TEST_CASE("prime sets") {
  const auto a = PrimeSet::finite({3, 2, 2});
  CHECK(a.listed() == std::vector<std::int64_t>{2, 3});
  CHECK_THROWS_AS(PrimeSet::finite({4}), InvalidArgument);
  const auto co5 = PrimeSet::cofinite({5});
  CHECK(co5.contains(7));
  CHECK_FALSE(co5.contains(5));
  CHECK_FALSE(co5.contains(9));
  CHECK(a.subset_of(co5));
  CHECK_FALSE(co5.subset_of(a));
  CHECK(PrimeSet::all().subset_of(PrimeSet::all()));
  CHECK(co5.subset_of(PrimeSet::cofinite({})));
  CHECK(a.unite(co5) == co5);
  CHECK(PrimeSet::finite({5}).unite(co5) == PrimeSet::all());
  CHECK(PrimeSet::finite({2, 5}).intersect(co5) == PrimeSet::finite({2}));
  CHECK(co5.intersect(PrimeSet::cofinite({7})) == PrimeSet::cofinite({5, 7}));
  for (const auto& s : {a, co5, PrimeSet::all(), PrimeSet{}}) CHECK(PrimeSet::parse(s.to_string()) == s);
  CHECK(co5.to_string() == "all\\{5}");
  CHECK(PrimeSet::of_integer(12) == a);
}

TEST_CASE("lattice normal form") {
  auto ln = distribute_to_lattice_normal(g("x1 \\/ x2"));
  CHECK(ln.root.kind == LatticeNode::Kind::Join);
  CHECK(ln.forms == std::vector<LinearForm>{LinearForm({1, 0}), LinearForm({0, 1})});

  ln = distribute_to_lattice_normal(g("-(x1 \\/ x2)"));
  CHECK(ln.root.kind == LatticeNode::Kind::Meet);
  CHECK(ln.forms == std::vector<LinearForm>{LinearForm({-1, 0}), LinearForm({0, -1})});

  const Term t = g("x1 + (x2 \\/ 0)");
  ln = distribute_to_lattice_normal(t);
  CHECK(ln.root.kind == LatticeNode::Kind::Join);
  CHECK(ln.forms == std::vector<LinearForm>{LinearForm({1, 1}), LinearForm({1, 0})});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int i = 0; i < 500; ++i) {
    const RationalVector x{frac(num(rng), den(rng)), frac(num(rng), den(rng))};
    CHECK(ln.evaluate(x) == eval_q(t, x));
  }
  CHECK_THROWS_AS(distribute_to_lattice_normal(g("x1 + z1")), InvalidArgument);
  CHECK(distribute_to_lattice_normal(g("x1 \\/ x1")).forms.size() == 1);
}

TEST_CASE("piecewise canonical examples") {
  auto pl = piecewise_canonical(g("x1"));
  REQUIRE(pl.pieces.size() == 1);
  CHECK(pl.pieces[0].region.rows.empty());
  CHECK(pl.pieces[0].form == LinearForm({1}));

  pl = piecewise_canonical(g("x1 \\/ x2"));
  REQUIRE(pl.pieces.size() == 2);
  CHECK(pl.pieces[0].region.rows == std::vector<LinearForm>{LinearForm({-1, 1})});
  CHECK(pl.pieces[0].form == LinearForm({0, 1}));
  CHECK(pl.pieces[1].region.rows == std::vector<LinearForm>{LinearForm({1, -1})});
  CHECK(pl.pieces[1].form == LinearForm({1, 0}));

  const Term t = g("2 x1 \\/ 6 x1");
  pl = piecewise_canonical(t);
  REQUIRE(pl.pieces.size() == 2);
  CHECK(pl.pieces[0].region.rows == std::vector<LinearForm>{LinearForm({1})});
  CHECK(pl.pieces[0].form == LinearForm({6}));
  CHECK(pl.pieces[1].region.rows == std::vector<LinearForm>{LinearForm({-1})});
  CHECK(pl.pieces[1].form == LinearForm({2}));
  for (const Rational& v : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(3), Rational(-3)}) {
    const auto i = pl.lookup({v});
    REQUIRE(i);
    CHECK(pl.pieces[*i].form.evaluate({v}) == eval_q(t, {v}));
  }
}

TEST_CASE("piecewise canonical soundness on random terms") {
  std::mt19937_64 rng(21);
  TermGenOptions opt;
  opt.signature = Signature::Group;
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  int done = 0;
  while (done < 40) {
    const Term t = random_term(rng, opt);
    const std::size_t n = 3;
    PiecewiseLinear pl;
    try {
      pl = piecewise_canonical(t, kDefaultPermutationCap, n);
    } catch (const CapExceeded&) {
      continue;
    }
    ++done;
    for (const auto& piece : pl.pieces) CHECK(is_full_dimensional(piece.region).full);
    for (int i = 0; i < 100; ++i) {
      const RationalVector x{frac(num(rng), den(rng)), frac(num(rng), den(rng)), frac(num(rng), den(rng))};
      const auto hits = pl.containing(x);
      REQUIRE_FALSE(hits.empty());
      const Rational v = eval_q(t, x);
      for (auto h : hits) CHECK(pl.pieces[h].form.evaluate(x) == v);
    }
  }
}

TEST_CASE("permutation cap") {
  const Term t = g("x1 \\/ 2 x1 \\/ 3 x1 \\/ 4 x1 \\/ 5 x1 \\/ 6 x1 \\/ 7 x1 \\/ 8 x1 \\/ 9 x1");
  CHECK_THROWS_AS(piecewise_canonical(t), CapExceeded);
  CHECK(piecewise_canonical(t, 9).pieces.size() == 2);
}

TEST_CASE("delta_{k,t} reduction") {
  CHECK(reduce_delta_kt({2, g("x1")}) == 2);
  CHECK(reduce_delta_kt({4, g("2 x1 \\/ 6 x1")}) == 2);
  CHECK(reduce_delta_kt({6, g("2 x1 + 4 x2")}) == 3);
  CHECK_THROWS_AS(reduce_delta_kt({0, g("x1")}), InvalidArgument);

  const std::vector<std::vector<std::int64_t>> subsets{{}, {2}, {3}, {2, 3}};
  for (const auto& s : subsets) {
    const bool has2 = std::find(s.begin(), s.end(), 2) != s.end();
    const bool has3 = std::find(s.begin(), s.end(), 3) != s.end();
    CHECK(delta_kt_oracle(4, g("2 x1 \\/ 6 x1"), 1, s) == has2);
    CHECK(delta_kt_oracle(6, g("2 x1 + 4 x2"), 2, s) == has3);
    CHECK(delta_kt_oracle(2, g("x1"), 1, s) == has2);
  }
}

TEST_CASE("reduction agrees with the Q_S oracle on random instances") {
  std::mt19937_64 rng(77);
  TermGenOptions opt;
  opt.signature = Signature::Group;
  opt.x_vars = 2;
  opt.max_depth = 3;
  const std::vector<std::vector<std::int64_t>> subsets{{}, {2}, {3}, {5}, {2, 3}, {2, 5}, {3, 5}, {2, 3, 5}};
  int done = 0;
  while (done < 15) {
    const Term t = random_term(rng, opt);
    const auto k = static_cast<std::int64_t>(rng() % 12 + 1);
    std::int64_t kp = 0;
    try {
      kp = reduce_delta_kt({k, t});
    } catch (const CapExceeded&) {
      continue;
    }
    ++done;
    for (const auto& s : subsets) {
      CHECK(delta_kt_oracle(k, t, 2, s) == PrimeSet::of_integer(kp).subset_of(PrimeSet::finite(s)));
    }
  }
}

TEST_CASE("group classification") {
  CHECK(classify_group_sentences({build_delta_k(4), build_delta_k(6)}) == AEClass::divisible(Family::G, PrimeSet::finite({2, 3})));
  CHECK(classify_group_sentences({}) == AEClass::divisible(Family::G, {}));
  CHECK(classify_group_sentences({DeltaKT{4, g("2 x1 \\/ 6 x1")}.sentence()}) ==
        AEClass::divisible(Family::G, PrimeSet::finite({2})));
  CHECK(classify_group_sentences({absurd_sentence()}).kind == AEClass::Kind::Trivial);

  // monotone: more sentences, more primes
  const auto small = classify_group_sentences({build_delta_k(2)});
  const auto big = classify_group_sentences({build_delta_k(2), build_delta_k(15)});
  CHECK(small.primes.subset_of(big.primes));

  auto both = parse_sentence("forall x1 exists! z1 : 2 z1 = x1 & z1 + z1 = x1", Signature::Group);
  CHECK(classify_group_sentences({both}) == AEClass::divisible(Family::G, PrimeSet::finite({2})));
  auto clash = parse_sentence("forall x1 exists! z1 : 2 z1 = x1 & z1 = x1", Signature::Group);
  const auto detailed = classify_group_sentences_detailed({clash});
  CHECK(detailed.cls.kind == AEClass::Kind::Trivial);
  CHECK(detailed.refuted == std::vector<std::string>{"z1 = x1"});
  auto two_z = parse_sentence("forall x1 x2 exists! z1 z2 : x1 = 3 z2 & 2 z1 = x2 \\/ x1 & z1 \\/ 0 = z1 \\/ 0",
                              Signature::Group);
  CHECK(classify_group_sentences({two_z}) == AEClass::divisible(Family::G, PrimeSet::finite({2, 3})));
  auto undefined = parse_sentence("forall x1 exists! z1 : z1 \\/ x1 = x1", Signature::Group);
  CHECK_THROWS_AS(classify_group_sentences({undefined}), FragmentError);
  CHECK(as_delta_kt(parse_sentence("forall x1 exists! z1 : x1 = -2 z1", Signature::Group))->k == 2);
}

TEST_CASE("delta equivalence") {
  CHECK(delta_equivalent(4, 2));
  CHECK_FALSE(delta_equivalent(2, 3));
  CHECK(delta_equivalent(1, 1));
  // oracle: Q_{2} satisfies both delta_4 and delta_2, Z neither; Q_{2} separates 2 and 3
  CHECK(holds_delta_exact(Algebra::localized({2}), 4) == holds_delta_exact(Algebra::localized({2}), 2));
  CHECK(holds_delta_exact(Algebra::integers(), 4) == holds_delta_exact(Algebra::integers(), 2));
  CHECK(holds_delta_exact(Algebra::localized({2}), 2) != holds_delta_exact(Algebra::localized({2}), 3));
}
