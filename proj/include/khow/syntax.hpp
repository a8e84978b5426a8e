#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "khow/formula.hpp"

namespace khow {

/// Deepest nesting the parser accepts before giving up.
inline constexpr std::size_t kMaxFormulaDepth = 10000;

/// Parses a complete formula. Grammar, loosest binding first:
///
///   phi   ::= disj ( '->' phi | '<->' disj )?
///   disj  ::= conj ( '|' conj )*
///   conj  ::= unary ( '&' unary )*
///   unary ::= '~' unary | 'U' unary | 'Kh' '(' phi ',' phi ')'
///           | 'Khp' '(' phi ',' phi ')' | 'top' | 'bot' | ident | '(' phi ')'
///
/// Throws FormulaSyntaxError.
Formula parse_formula(std::string_view text);

struct PrefixParse {
  Formula formula;
  /// Byte offset just past the last consumed token.
  std::size_t end;
};

/// Parses the longest formula starting at byte `start` and stops at the first
/// token that cannot extend it. Used by the proof-file reader, where formulas
/// are followed by further fields on the same line.
PrefixParse parse_formula_prefix(std::string_view text, std::size_t start = 0);

/// Prints with the minimum parentheses needed for parse_formula to rebuild the
/// identical tree.
std::string print_formula(const Formula& f);

/// True if `name` can be used as a proposition letter.
bool is_valid_letter(std::string_view name);

}  // namespace khow
