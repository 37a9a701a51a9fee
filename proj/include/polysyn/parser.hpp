#pragma once

#include "polysyn/expr.hpp"
#include "polysyn/synvalue.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polysyn {

// Byte offsets [start, end) into the input.
struct SourceSpan {
  std::size_t start = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, SourceSpan where);
  SourceSpan where() const { return where_; }

 private:
  SourceSpan where_;
};

// Largest exponent accepted in concrete syntax.
inline constexpr std::uint32_t kMaxExponent = 1u << 16;

// Infix grammar, precedence ^ > unary - > * > binary +/-; left associative
// +, -, *; exponents are natural-number literals. `quote(e)`, `eval(e : T)`,
// `opd(a, b)`, `not(e)` and `syneq(a, b)` are reserved call forms.
// Juxtaposition is not multiplication. A unary minus directly before a
// numeric literal folds into a signed constant so that negative constants
// round-trip; otherwise unary minus parses as 0 - e.
//
// Named constants have no production of their own: a bare identifier always
// parses as a variable and is reclassified against a definition table by
// global::resolve_constants.
Expr parse_expr(std::string_view text);

// Minimal-parenthesis infix form; parse_expr(print_expr(e)) == e for every
// expression without Deriv/NamedConst nodes (Deriv markers print as
// "d/dx(e)" for traces but have no input syntax).
std::string print_expr(const Expr& e);

// Constructor grammar for syntactic values:
//   con(s_<rational>) | var(s_<ident>) | plus(s,s) | minus(s,s) | times(s,s)
//   | power(s,<nat>)
SynValue parse_synvalue(std::string_view text);

std::string print_synvalue(const SynValue& s);

// Corpus format: one expression per line, '#' starts a comment, blank lines
// skipped. Returns (1-based line number, expression) pairs.
std::vector<std::pair<std::size_t, Expr>> parse_expr_lines(std::string_view text);

}  // namespace polysyn
