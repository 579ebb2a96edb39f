#pragma once

#include <string>
#include <vector>

#include "efdkit/classes.hpp"
#include "efdkit/term.hpp"

namespace efdkit {

/// Class inclusion (fewer models is lower). Throws FamilyMismatch across families.
bool includes(const AEClass& c1, const AEClass& c2);
AEClass meet(const AEClass& c1, const AEClass& c2);
AEClass join(const AEClass& c1, const AEClass& c2);

/// Bal (balanced l-group logic) or L_P (the logic of perfect MV-algebras), expanded by
/// the divisions of the primes in `primes`.
struct LogicExpansion {
  enum class Base { Bal, LP };
  enum class Special { None, Inconsistent, Classical };
  Base base = Base::Bal;
  PrimeSet primes;
  Special special = Special::None;

  /// Classical is only an L_P variant.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const LogicExpansion&, const LogicExpansion&) = default;
};

std::string to_string(LogicExpansion::Base b);

/// The AE-class whose algebras are the models of the expansion.
AEClass class_of(const LogicExpansion& e);

enum class ExpansionOrder { MorphismExists, ReverseMorphismExists, Equipollent, Incomparable };
std::string to_string(ExpansionOrder o);

/// MorphismExists: a morphism e1 -> e2 (class(e2) included in class(e1)).
ExpansionOrder expansion_order(const LogicExpansion& e1, const LogicExpansion& e2);

struct AxiomSchema {
  std::string name;     // "A_2", "D_3"
  std::string formula;  // printed with the fresh symbol applied to x
  std::vector<std::string> fresh_symbols;
  /// Left-hand side over z1 standing for d_p(x): `p z1` for A_p, t_p(z1) for D_p.
  Term body;
  std::string note;
};

/// One schema per prime; throws InvalidArgument for special variants or cofinite sets.
std::vector<AxiomSchema> emit_axioms(const LogicExpansion& e);

/// Equivalence formulas and defining equations of the base logic, as printable metadata.
struct BaseLogicMetadata {
  std::string equivalence_formulas;
  std::string defining_equations;
};
BaseLogicMetadata base_metadata(LogicExpansion::Base b);

/// Finite poset given by its order relation.
struct FinitePoset {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> leq;

  std::size_t size() const noexcept { return labels.size(); }
  /// Reflexive, antisymmetric, transitive.
  bool is_partial_order() const;
};

FinitePoset chain_poset(std::size_t k);
/// Subsets of a k-element set under inclusion.
FinitePoset boolean_cube(std::size_t k);
/// Every element of `lower` below every element of `upper`.
FinitePoset ordinal_sum(const FinitePoset& lower, const FinitePoset& upper);
FinitePoset dual(const FinitePoset& p);
bool is_isomorphic(const FinitePoset& a, const FinitePoset& b);

/// {Trivial} u {Divisible(S) : S subset of primes} (plus Boolean for P), ordered by includes.
FinitePoset class_poset(Family f, const std::vector<std::int64_t>& primes);
/// Base^S for S subset of primes plus the special variants, ordered by morphism existence.
FinitePoset expansion_poset(LogicExpansion::Base b, const std::vector<std::int64_t>& primes);

/// All subsets of the given primes as prime sets, in binary counting order.
std::vector<PrimeSet> all_subsets(const std::vector<std::int64_t>& primes);

}  // namespace efdkit
