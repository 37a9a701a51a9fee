#pragma once

#include "polysyn/expr.hpp"
#include "polysyn/synvalue.hpp"

#include <string>
#include <vector>

namespace polysyn {

enum class RuleName {
  ConstantRule,
  VariableRule,
  SumDiffRule,
  ProductRule,
  PowerRuleZero,
  PowerRulePos,
  SimplifyZeroAdd,
  SimplifyOneMul,
  CollectLikeTerms,
};

std::string to_string(RuleName r);

// One rewrite step; before and after are the whole expression. Pending
// derivatives appear as d/dx(...) markers in the printed forms.
struct TraceStep {
  RuleName rule;
  Expr before;
  Expr after;
};

struct DiffResult {
  Expr result;  // polynomial; never contains a derivative marker
  std::vector<TraceStep> trace;
};

// PolyDiff: starting from d/dx(u), eliminates derivative markers
// outermost-leftmost with the five differentiation rules, then applies the
// simplification rules (0+u, u+0, 1*u, u*1, 0*u, u*0, u^1) to a fixed point,
// then collects like terms into the canonical form. One trace step per rule
// application. Throws std::invalid_argument when u is not a polynomial.
DiffResult poly_diff(const Expr& u, const VarName& x);

// The simplification and like-term-collection phases alone. Idempotent and
// normal-form preserving.
Expr simplify(const Expr& u);

// O_pd: the same algorithm as an operator on syntactic values. Works purely
// on SynValue trees (independent rule and collection code, no decoding
// through Expr), which makes the CompBehavior cross-check meaningful.
// Throws std::invalid_argument when b is not a var node.
SynValue opd_apply(const SynValue& a, const SynValue& b);

}  // namespace polysyn
