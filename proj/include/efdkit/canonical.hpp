#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "efdkit/classes.hpp"
#include "efdkit/geometry.hpp"
#include "efdkit/term.hpp"

namespace efdkit {

inline constexpr std::size_t kDefaultPermutationCap = 8;

/// Pure {\/, /\} term over indices into a list of linear forms.
struct LatticeNode {
  enum class Kind { Leaf, Join, Meet };
  Kind kind = Kind::Leaf;
  std::size_t form = 0;  // Leaf only
  std::vector<LatticeNode> children;  // two children for Join/Meet

  static LatticeNode leaf(std::size_t i) { return {Kind::Leaf, i, {}}; }
  static LatticeNode join(LatticeNode a, LatticeNode b) { return {Kind::Join, 0, {std::move(a), std::move(b)}}; }
  static LatticeNode meet(LatticeNode a, LatticeNode b) { return {Kind::Meet, 0, {std::move(a), std::move(b)}}; }
  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

/// s(u1, ..., up): distinct forms in order of first appearance.
struct LatticeNormal {
  std::size_t n = 0;
  std::vector<LinearForm> forms;
  LatticeNode root;

  /// Value of s at x by evaluating each form.
  Rational evaluate(const RationalVector& x) const;
};

/// Pushes +, -, and scalars below \/ and /\. `n` defaults to the largest x-index of t.
LatticeNormal distribute_to_lattice_normal(const Term& t, std::size_t n = 0);

struct Piece {
  IneqSystem region;
  LinearForm form;
};

struct PiecewiseLinear {
  std::size_t n = 0;
  std::vector<Piece> pieces;

  /// Indices of all pieces whose (closed) region contains x.
  std::vector<std::size_t> containing(const RationalVector& x) const;
  /// First piece containing x.
  std::optional<std::size_t> lookup(const RationalVector& x) const;
};

/// One piece per full-dimensional chain ordering of the distinct linear forms.
/// Throws CapExceeded when there are more than `cap` forms.
PiecewiseLinear piecewise_canonical(const Term& t, std::size_t cap = kDefaultPermutationCap, std::size_t n = 0);
PiecewiseLinear piecewise_canonical(const LatticeNormal& ln, std::size_t cap = kDefaultPermutationCap);

/// forall x exists! z : k z = t(x)
struct DeltaKT {
  std::int64_t k = 1;
  Term t;

  /// k >= 1, t a group term in x-variables only.
  void validate() const;
  EFDSentence sentence() const;
};

/// Recognizes `k z1 = t(x)` (either side, m = 1); k may be written as 1 via bare z1.
std::optional<DeltaKT> as_delta_kt(const EFDSentence& phi);

/// k' = k / gcd(k, coefficients of every piece form).
std::int64_t reduce_delta_kt(const DeltaKT& d, std::size_t cap = kDefaultPermutationCap);

/// True when the term denotes 0 in every Abelian l-group.
bool is_group_identity(const Term& lhs, const Term& rhs, std::size_t cap = 32);

struct GroupClassification {
  AEClass cls;
  /// k' of every conjunct that was reduced (in input order).
  std::vector<std::int64_t> k_primes;
  /// Equations whose failure forced the Trivial class, printed.
  std::vector<std::string> refuted;
};

/// Each sentence must be in the defined-by-division fragment: every z_j has an
/// equation k_j z_j = t_j(x) (k_j != 0, t_j z-free); the remaining equations
/// are checked as l-group identities after substituting z_j = t_j / k_j.
GroupClassification classify_group_sentences_detailed(const std::vector<EFDSentence>& sentences,
                                                      std::size_t cap = kDefaultPermutationCap);
AEClass classify_group_sentences(const std::vector<EFDSentence>& sentences, std::size_t cap = kDefaultPermutationCap);
AEClass classify_delta_kts(const std::vector<DeltaKT>& ds, std::size_t cap = kDefaultPermutationCap);

/// The explicit marker of the trivial class: forall x1 exists! z1 : z1 = x1 & x1 = 0.
EFDSentence absurd_sentence(Signature sig = Signature::Group);

/// Same prime support.
bool delta_equivalent(std::int64_t k1, std::int64_t k2);

}  // namespace efdkit
