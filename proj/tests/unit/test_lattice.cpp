#include <doctest.h>

#include "efdkit/errors.hpp"
#include "efdkit/lattice.hpp"
#include "efdkit/models.hpp"

using namespace efdkit;

namespace {

AEClass div(Family f, std::vector<std::int64_t> s) { return AEClass::divisible(f, PrimeSet::finite(std::move(s))); }
LogicExpansion bal(std::vector<std::int64_t> s) { return {LogicExpansion::Base::Bal, PrimeSet::finite(std::move(s))}; }
LogicExpansion lp(std::vector<std::int64_t> s) { return {LogicExpansion::Base::LP, PrimeSet::finite(std::move(s))}; }

}  // namespace

TEST_CASE("inclusion") {
  CHECK(includes(div(Family::G, {2, 3}), div(Family::G, {2})));
  CHECK(includes(AEClass::boolean(), div(Family::P, {5})));
  CHECK_FALSE(includes(div(Family::G, {2}), div(Family::G, {3})));
  // Q_{2} separates: it satisfies delta_2 but not delta_3
  CHECK(holds_delta_exact(Algebra::localized({2}), 2));
  CHECK_FALSE(holds_delta_exact(Algebra::localized({2}), 3));
  CHECK(includes(AEClass::trivial(Family::G), div(Family::G, {})));
  CHECK_THROWS_AS(includes(AEClass::trivial(Family::G), AEClass::trivial(Family::P)), FamilyMismatch);
  CHECK_THROWS_AS(includes(AEClass{Family::G, AEClass::Kind::Boolean, {}}, AEClass::trivial(Family::G)),
                  InvalidArgument);
}

TEST_CASE("meet and join") {
  CHECK(meet(div(Family::G, {2}), div(Family::G, {3})) == div(Family::G, {2, 3}));
  CHECK(join(div(Family::G, {2}), div(Family::G, {3})) == div(Family::G, {}));
  CHECK(join(AEClass::trivial(Family::P), AEClass::boolean()) == AEClass::boolean());
  CHECK(meet(AEClass::boolean(), div(Family::P, {})) == AEClass::boolean());
  const auto co = AEClass::divisible(Family::G, PrimeSet::cofinite({2}));
  CHECK(meet(co, div(Family::G, {2})) == AEClass::divisible(Family::G, PrimeSet::all()));
  CHECK(join(co, div(Family::G, {2, 3})) == div(Family::G, {3}));
}

TEST_CASE("expansion order") {
  CHECK(expansion_order(bal({2}), bal({2, 3})) == ExpansionOrder::MorphismExists);
  CHECK(expansion_order(lp({}), {LogicExpansion::Base::LP, {}, LogicExpansion::Special::Classical}) ==
        ExpansionOrder::MorphismExists);
  CHECK(expansion_order(bal({2}), bal({3})) == ExpansionOrder::Incomparable);
  CHECK(expansion_order(bal({2, 3}), bal({2})) == ExpansionOrder::ReverseMorphismExists);
  CHECK(expansion_order(bal({3, 2}), bal({2, 3})) == ExpansionOrder::Equipollent);
  CHECK_THROWS_AS(expansion_order(bal({}), lp({})), FamilyMismatch);
  CHECK_THROWS_AS(class_of({LogicExpansion::Base::Bal, {}, LogicExpansion::Special::Classical}), InvalidArgument);
}

TEST_CASE("axioms") {
  auto ax = emit_axioms(bal({2}));
  REQUIRE(ax.size() == 1);
  CHECK(ax[0].name == "A_2");
  CHECK(ax[0].formula == "x -> 2 d2(x)");
  CHECK(ax[0].fresh_symbols == std::vector<std::string>{"d2"});
  ax = emit_axioms(lp({3}));
  REQUIRE(ax.size() == 1);
  CHECK(ax[0].name == "D_3");
  CHECK(ax[0].body == build_t_k(3));
  CHECK(ax[0].formula == "(3 d3(x) /\\ ~2 d3(x)^2 \\/ d3(x)^3) <-> x");
  CHECK(emit_axioms(bal({})).empty());
  CHECK_THROWS_AS(emit_axioms({LogicExpansion::Base::LP, {}, LogicExpansion::Special::Classical}), InvalidArgument);
  CHECK_THROWS_AS(emit_axioms({LogicExpansion::Base::Bal, PrimeSet::all()}), InvalidArgument);
}

TEST_CASE("finite shadows of the class lattices") {
  const std::vector<std::int64_t> ps{2, 3, 5};
  const auto g = class_poset(Family::G, ps);
  const auto p = class_poset(Family::P, ps);
  CHECK(g.is_partial_order());
  CHECK(p.is_partial_order());
  CHECK(is_isomorphic(g, ordinal_sum(chain_poset(1), boolean_cube(3))));
  CHECK(is_isomorphic(p, ordinal_sum(chain_poset(2), boolean_cube(3))));
  CHECK_FALSE(is_isomorphic(g, ordinal_sum(boolean_cube(3), chain_poset(1))));
  CHECK(is_isomorphic(expansion_poset(LogicExpansion::Base::Bal, ps), dual(ordinal_sum(chain_poset(1), boolean_cube(3)))));
  CHECK(is_isomorphic(expansion_poset(LogicExpansion::Base::LP, ps), dual(ordinal_sum(chain_poset(2), boolean_cube(3)))));
}
