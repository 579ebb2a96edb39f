#pragma once

#include <string>

#include <json.hpp>

#include "efdkit/canonical.hpp"
#include "efdkit/classes.hpp"
#include "efdkit/geometry.hpp"
#include "efdkit/lattice.hpp"
#include "efdkit/models.hpp"
#include "efdkit/term.hpp"
#include "efdkit/translate.hpp"

namespace efdkit {

/// Insertion-ordered so that output is byte-stable.
using Json = nlohmann::ordered_json;

/// Returns {"schema": "efdkit.<name>/1", ...body}.
Json with_schema(const std::string& name, const Json& body);

// Node-tagged term trees: {"node":"plus","left":..,"right":..},
// {"node":"scalar","k":2,"operand":..}, {"node":"var","name":"x1"}, {"node":"zero"}.
Json to_json(const Term& t);
Term term_from_json(const Json& j);

Json to_json(const Equation& e);
Json to_json(const EFDSentence& s);
EFDSentence sentence_from_json(const Json& j);
Json to_json(const Identity& id);
Json to_json(const QuasiIdentity& q);

Json to_json(const LinearForm& f);
/// {"n": int, "rows": [[int,...],...]}
Json to_json(const IneqSystem& s);
IneqSystem ineq_from_json(const Json& j);
Json to_json(const FullDimResult& r);
/// Coordinates as exact rational strings.
Json point_json(const RationalVector& v);
Json to_json(const PiecewiseLinear& p);

/// Finite sets as a bare list [2,3]; cofinite ones as {"all_except":[5]}.
Json to_json(const PrimeSet& s);
/// {"family":"G","class":"divisible","primes":[2,3]} / {"family":"P","class":"boolean"}
Json to_json(const AEClass& c);
/// {"family":"G","class":{"divisible":[2,3]}} / {"family":"P","class":"trivial"}
Json lattice_json(const AEClass& c);
Json to_json(const GroupClassification& g);
Json to_json(const LogicExpansion& e);
Json to_json(const AxiomSchema& a);
Json to_json(const FinitePoset& p);

Json to_json(const Element& e);
Json to_json(const Verdict& v);
Json to_json(const TwoCheck& c);
Json to_json(const RadBasicSentence& r);
Json to_json(const MVClassification& c);

}  // namespace efdkit
