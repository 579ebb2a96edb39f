#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "efdkit/canonical.hpp"
#include "efdkit/classes.hpp"
#include "efdkit/term.hpp"

namespace efdkit {

using Bits = std::vector<int>;

/// Hoop term to l-group term: x_i -> x_i \/ -x_i, (a -. b) -> (a - b) \/ 0, z_j fixed.
Term star_term(const Term& t);
/// alpha* plus the conjuncts z_j \/ 0 = z_j for j = 1..m.
EFDSentence star_sentence(const EFDSentence& phi);

struct TwoCheck {
  bool holds = false;
  /// For every e in {0,1}^n the unique solving e'.
  std::map<Bits, Bits> witness;
  /// First e with no solution or two solutions.
  std::optional<Bits> failing;
  std::string reason;  // "no-solution" | "non-unique"
};

/// Exhaustive check in the two-element MV-algebra; throws FragmentError when n + m > 20.
TwoCheck check_in_two(const EFDSentence& phi);

struct RadBasicSentence {
  EFDSentence sentence;
  Bits sign;    // e
  Bits sign_z;  // e'
};

/// The 2^n sentences phi_e. Each disjunction (P1 & .. & Pa) or (Q1 & .. & Qb) is
/// written as the conjunction over pairs (Pi or Qj), each pair encoded as one equation.
/// Throws FragmentError naming the failing e when phi fails in 2.
std::vector<RadBasicSentence> phi_rad_decompose(const EFDSentence& phi);

/// MV terms evaluated on radical arguments, rewritten as hoop terms.
/// Throws FragmentError when an equation compares a radical value with a co-radical one.
EFDSentence mv_to_hoop(const EFDSentence& phi);
inline EFDSentence mv_to_hoop(const RadBasicSentence& r) { return mv_to_hoop(r.sentence); }

struct MVBranch {
  Bits sign;
  EFDSentence hoop;
  EFDSentence group;
  GroupClassification group_class;
  AEClass cls;
};

struct MVSentenceTrace {
  EFDSentence input;
  bool boolean_marker = false;
  bool in_two = true;
  std::vector<MVBranch> branches;
  AEClass cls;
};

struct MVClassification {
  AEClass cls;
  /// Set when some input fails in 2; the class is then reported as Trivial.
  bool per_paper_scope = false;
  std::vector<MVSentenceTrace> sentences;
};

/// The Boolean marker identity in EFD form.
EFDSentence boolean_marker_sentence();

MVClassification classify_mv_sentences_detailed(const std::vector<EFDSentence>& sentences,
                                                std::size_t cap = kDefaultPermutationCap);
AEClass classify_mv_sentences(const std::vector<EFDSentence>& sentences, std::size_t cap = kDefaultPermutationCap);

}  // namespace efdkit
