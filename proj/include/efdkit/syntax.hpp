#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "efdkit/term.hpp"

namespace efdkit {

// Grammar (ASCII):
//   term    := meetexp ( '\/' meetexp )*
//   meetexp := sum ( '/\' sum )*
//   sum     := product ( ('+' | '-' | '-.') product )*     binary '-' is Group only
//   product := unary ( '*' unary )*                        MV only
//   unary   := '-' unary | '~' unary | INT operand | postfix
//   operand := unary not starting with '-'
//   postfix := atom ( '^' INT )*
//   atom    := '0' | x<digits> | z<digits> | '(' term ')'
// `-k t` with a literal k parses as Scalar(-k, t). Binary operators are left associative.

Term parse_term(std::string_view text, Signature sig);

/// `forall x1 .. xn exists! z1 .. zm : eq1 & eq2 & ...`; the `forall` block may be omitted when n = 0.
EFDSentence parse_sentence(std::string_view text, Signature sig);

/// `forall x1 .. xn : lhs = rhs`
Identity parse_identity(std::string_view text, Signature sig);

using VariableNamer = std::function<std::string(const Variable&)>;

std::string print_term(const Term& t);
std::string print_term(const Term& t, const VariableNamer& namer);
std::string print_equation(const Equation& e);
std::string print_sentence(const EFDSentence& s);
std::string print_identity(const Identity& id);
std::string print_quasiidentity(const QuasiIdentity& q);

}  // namespace efdkit
