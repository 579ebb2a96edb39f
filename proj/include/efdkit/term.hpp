#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace efdkit {

/// The three term languages: l-groups {+,-,0,\/,/\}, hoops {+,-.,0} and MV {+,~,0}.
enum class Signature { Group, Hoop, MV };

std::string_view to_string(Signature sig);
Signature signature_from_string(std::string_view name);

/// x-variables are universally quantified, z-variables are the defined ones.
enum class VarKind { X, Z };

enum class Op {
  Var,
  Zero,
  Plus,
  Neg,     // group negation
  Join,
  Meet,
  Diff,    // truncated difference (monus)
  MVNeg,   // MV negation
  Times,   // MV strong conjunction (macro)
  Scalar,  // k t
  Power,   // t^k (MV macro)
};

struct Variable {
  VarKind kind = VarKind::X;
  int index = 1;  // 1-based

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

std::string variable_name(const Variable& v);

/// Immutable term tree with shared subterms.
class Term {
 public:
  Term();  // Zero

  static Term var(VarKind kind, int index);
  static Term x(int index) { return var(VarKind::X, index); }
  static Term z(int index) { return var(VarKind::Z, index); }
  static Term zero() { return Term(); }
  static Term plus(Term a, Term b);
  static Term neg(Term a);
  static Term join(Term a, Term b);
  static Term meet(Term a, Term b);
  static Term diff(Term a, Term b);
  static Term mv_neg(Term a);
  static Term times(Term a, Term b);
  static Term scalar(std::int64_t k, Term a);
  static Term power(std::int64_t k, Term a);

  Op op() const noexcept;
  bool is_binary() const noexcept;
  bool is_unary() const noexcept;

  // Var accessors
  Variable variable() const;
  // Scalar/Power coefficient
  std::int64_t coefficient() const;

  // children: binary ops use left/right, unary ops (Neg, MVNeg, Scalar, Power) use operand
  const Term& left() const;
  const Term& right() const;
  const Term& operand() const;

  std::size_t size() const noexcept;
  std::size_t depth() const noexcept;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node);
  explicit Term(std::nullptr_t) {}  // empty child slot
  static Term make_unary(Op op, std::int64_t k, Term a);
  std::shared_ptr<const Node> node_;
};

bool admits(Signature sig, const Term& t);
/// Throws SignatureError naming the first offending node.
void require_admits(Signature sig, const Term& t);

/// Variables occurring in t, sorted and unique.
std::vector<Variable> variables_of(const Term& t);
bool mentions_kind(const Term& t, VarKind kind);
/// Largest index of the given kind (0 when absent).
int max_index(const Term& t, VarKind kind);

/// Rebuilds t replacing each variable by `f(v)`.
Term substitute(const Term& t, const std::function<Term(const Variable&)>& f);

/// Rewrites t into the signature's primitive operations only.
Term expand_macros(const Term& t, Signature sig);

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

/// forall x1..xn exists! z1..zm  /\ equations
struct EFDSentence {
  Signature signature = Signature::Group;
  int n = 0;
  int m = 1;
  std::vector<Equation> equations;

  /// Throws on violated invariants (m >= 1, variable ranges, signature, nonempty).
  void validate() const;
  friend bool operator==(const EFDSentence&, const EFDSentence&) = default;
};

/// forall x1..xn  lhs = rhs
struct Identity {
  Signature signature = Signature::Group;
  int n = 0;
  Equation equation;

  void validate() const;
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// U(phi): forall x y z ( alpha(x,y) /\ alpha(x,z) -> y = z ).
/// The duplicated block is renamed: y_j is z_j and z_j is z_{m+j}.
struct QuasiIdentity {
  Signature signature = Signature::Group;
  int n = 0;
  int m = 0;  // size of one block; variables z1..z_{2m}
  std::vector<Equation> hypotheses;
  std::vector<Equation> conclusions;
};

QuasiIdentity uniqueness_quasiidentity(const EFDSentence& phi);

/// (k z /\ ~(2 z^2)) \/ z^k over z1; k = 1 yields bare z1 for `1 z` and `z^1`.
Term build_t_k(std::int64_t k);
/// forall x1 exists! z1 : k z1 = x1 (Group by default; also valid as a hoop sentence).
EFDSentence build_delta_k(std::int64_t k, Signature sig = Signature::Group);
/// forall x1 exists! z1 : t_k(z1) = x1
EFDSentence build_epsilon_k(std::int64_t k);
/// The Boolean marker identity forall x1 : 2 x1 = x1 over MV.
Identity boolean_identity();

/// Equivalent EFD form of an identity: adds the conjunct z1 = x1 (or z1 = 0 when n = 0).
EFDSentence identity_as_sentence(const Identity& id);

}  // namespace efdkit
