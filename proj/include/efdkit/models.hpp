#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "efdkit/numeric.hpp"
#include "efdkit/term.hpp"

namespace efdkit {

/// Elements are lexicographic tuples of rationals; the algebra fixes the width.
using Element = std::vector<Rational>;
using Assignment = std::map<Variable, Element>;

/// Computable witness algebra. Every group variant is totally ordered, so
/// lattice operations are lexicographic max/min.
class Algebra {
 public:
  enum class Kind { Integer, Rational, Localized, Lex, PositiveCone, Gamma, Two, Trivial };

  static Algebra integers();
  static Algebra rationals();
  /// Q_S for a finite set of primes S (S = {} is Z).
  static Algebra localized(std::vector<std::int64_t> primes);
  /// Z lex-times the given group.
  static Algebra lex(const Algebra& right);
  static Algebra positive_cone(const Algebra& group);
  /// Gamma(Z lex-times G, (1,0)).
  static Algebra gamma(const Algebra& group);
  static Algebra two();
  static Algebra trivial(Signature sig);

  /// Descriptor syntax: z, q, qs:2,3, lex(z,G), pos(G), gamma(G), two, trivial:group|hoop|mv.
  static Algebra parse(std::string_view text);
  std::string describe() const;

  Kind kind() const noexcept { return kind_; }
  Signature species() const noexcept;
  bool is_group() const noexcept;
  std::size_t width() const noexcept;
  const std::vector<std::int64_t>& primes() const noexcept { return primes_; }
  /// Underlying group for Lex (right factor), PositiveCone and Gamma.
  const Algebra& inner() const;

  bool contains(const Element& e) const;
  void require_contains(const Element& e) const;

  Element zero() const;
  /// MV unit; throws for non-MV algebras.
  Element unit() const;

 private:
  Kind kind_ = Kind::Rational;
  Signature trivial_sig_ = Signature::Group;
  std::vector<std::int64_t> primes_;
  std::shared_ptr<const Algebra> inner_;
};

/// Element literal: "3/4", "(1, -1/2)", "(0, 1, 2)".
Element parse_element(std::string_view text);
std::string to_string(const Element& e);

/// Exact value of t; throws SignatureError on inadmissible operations and
/// UniverseError on assignments outside the universe.
Element eval(const Algebra& a, const Term& t, const Assignment& env);
bool holds(const Algebra& a, const Equation& eq, const Assignment& env);

/// e * e = 0 in an MV algebra.
bool radical_member(const Algebra& a, const Element& e);

/// Exact decision of delta_k for Z, Q, Q_S, lex products and trivial groups.
bool holds_delta_exact(const Algebra& a, std::int64_t k);
/// Exact decision of epsilon_k for Gamma models (via the radical), 2 and trivial algebras.
bool holds_epsilon_exact(const Algebra& a, std::int64_t k);

/// Inverse of t_k on Gamma models: (i, g) -> (i, g/k) when that lies in the universe.
std::optional<Element> d_k(const Algebra& a, const Element& e, std::int64_t k);

/// Random element; numerators and denominators bounded by `cap`, denominators legal for the model.
Element random_element(const Algebra& a, std::mt19937_64& rng, std::int64_t cap = 12);
/// Random radical (i = 0) or co-radical (i = 1) element of a Gamma model.
Element random_radical(const Algebra& a, std::mt19937_64& rng, bool coradical = false, std::int64_t cap = 12);
/// Small hand-picked elements (0, units, 1/2 ...) that lie in the universe.
std::vector<Element> structured_elements(const Algebra& a);

struct Verdict {
  enum class Status { Consistent, Falsified, Inconclusive };
  Status status = Status::Consistent;
  /// "exact" when the exact solver handled every sampled point, else "sampled".
  std::string confidence = "exact";
  /// True when the x-samples covered the whole (finite) universe.
  bool exhaustive = false;
  std::size_t samples = 0;
  std::string reason;  // "no-solution" | "non-unique" | "identity-fails" | ...
  Assignment witness;
  std::vector<Element> solutions;  // z-values found at the witness (m = 1) or tuples flattened
};

std::string to_string(Verdict::Status s);

/// Outcome of solving alpha(a, z) for a fixed x-assignment.
struct SolveResult {
  bool exact = true;
  /// Number of solutions, saturated at 2.
  int count = 0;
  /// Up to two solutions, each a z-tuple.
  std::vector<std::vector<Element>> solutions;
};

/// Solves the sentence's equations at the given x-values. Exact for m = 1 over
/// Z, Q, Q_S, Gamma of those, 2 and trivial algebras; otherwise a bounded candidate search.
SolveResult solve_at(const Algebra& a, const EFDSentence& phi, const std::vector<Element>& xs);

/// Samples x-assignments and checks existence and uniqueness of z.
Verdict check_sentence_sampled(const Algebra& a, const EFDSentence& phi, std::size_t budget = 500,
                               std::uint64_t seed = kDefaultSeed);
/// Checks an identity on sampled assignments.
Verdict check_identity_sampled(const Algebra& a, const Identity& id, std::size_t budget = 500,
                               std::uint64_t seed = kDefaultSeed);
/// Checks U(phi) alone: at most one solution per sampled x.
Verdict check_uniqueness_sampled(const Algebra& a, const EFDSentence& phi, std::size_t budget = 500,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace efdkit
