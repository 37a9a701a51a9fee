#include "polysyn/polydiff.hpp"

#include "polysyn/semantics.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace polysyn {

std::string to_string(RuleName r) {
  switch (r) {
    case RuleName::ConstantRule: return "ConstantRule";
    case RuleName::VariableRule: return "VariableRule";
    case RuleName::SumDiffRule: return "SumDiffRule";
    case RuleName::ProductRule: return "ProductRule";
    case RuleName::PowerRuleZero: return "PowerRuleZero";
    case RuleName::PowerRulePos: return "PowerRulePos";
    case RuleName::SimplifyZeroAdd: return "SimplifyZeroAdd";
    case RuleName::SimplifyOneMul: return "SimplifyOneMul";
    case RuleName::CollectLikeTerms: return "CollectLikeTerms";
  }
  return "?";
}

namespace {

bool is_const(const Expr& e, long v) {
  return e.kind() == ExprKind::Const && e.const_value() == v;
}

// One differentiation rule applied to the marker d/dx(u); u is marker-free.
std::pair<Expr, RuleName> apply_diff_rule(const Expr& u, const VarName& x) {
  switch (u.kind()) {
    case ExprKind::Const:
      return {Expr::constant(0L), RuleName::ConstantRule};
    case ExprKind::Var:
      if (u.var_name() == x) return {Expr::constant(1L), RuleName::VariableRule};
      return {Expr::constant(0L), RuleName::ConstantRule};
    case ExprKind::Add:
      return {Expr::add(Expr::deriv_marker(u.lhs(), x), Expr::deriv_marker(u.rhs(), x)),
              RuleName::SumDiffRule};
    case ExprKind::Sub:
      return {Expr::sub(Expr::deriv_marker(u.lhs(), x), Expr::deriv_marker(u.rhs(), x)),
              RuleName::SumDiffRule};
    case ExprKind::Mul:
      return {Expr::add(Expr::mul(Expr::deriv_marker(u.lhs(), x), u.rhs()),
                        Expr::mul(u.lhs(), Expr::deriv_marker(u.rhs(), x))),
              RuleName::ProductRule};
    case ExprKind::Pow: {
      std::uint32_t n = u.exponent();
      if (n == 0) return {Expr::constant(0L), RuleName::PowerRuleZero};
      return {Expr::mul(Expr::mul(Expr::constant(Rational(n)),
                                  Expr::pow(u.operand(), n - 1)),
                        Expr::deriv_marker(u.operand(), x)),
              RuleName::PowerRulePos};
    }
    default:
      throw std::logic_error("apply_diff_rule: non-polynomial under a marker");
  }
}

// Rewrites the outermost-leftmost derivative marker; returns the whole tree.
std::optional<std::pair<Expr, RuleName>> reduce_first_marker(const Expr& e) {
  if (e.kind() == ExprKind::Deriv) {
    return apply_diff_rule(e.operand(), e.deriv_var());
  }
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul: {
      if (auto left = reduce_first_marker(e.lhs())) {
        Expr rebuilt = e.kind() == ExprKind::Add ? Expr::add(left->first, e.rhs())
                       : e.kind() == ExprKind::Sub ? Expr::sub(left->first, e.rhs())
                                                   : Expr::mul(left->first, e.rhs());
        return {{std::move(rebuilt), left->second}};
      }
      if (auto right = reduce_first_marker(e.rhs())) {
        Expr rebuilt = e.kind() == ExprKind::Add ? Expr::add(e.lhs(), right->first)
                       : e.kind() == ExprKind::Sub ? Expr::sub(e.lhs(), right->first)
                                                   : Expr::mul(e.lhs(), right->first);
        return {{std::move(rebuilt), right->second}};
      }
      return std::nullopt;
    }
    case ExprKind::Pow: {
      if (auto inner = reduce_first_marker(e.operand())) {
        return {{Expr::pow(inner->first, e.exponent()), inner->second}};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

// 0+u, u+0, 1*u, u*1, 0*u, u*0, u^1 at this node only.
std::optional<std::pair<Expr, RuleName>> match_local_rule(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Add:
      if (is_const(e.lhs(), 0)) return {{e.rhs(), RuleName::SimplifyZeroAdd}};
      if (is_const(e.rhs(), 0)) return {{e.lhs(), RuleName::SimplifyZeroAdd}};
      return std::nullopt;
    case ExprKind::Mul:
      if (is_const(e.lhs(), 1)) return {{e.rhs(), RuleName::SimplifyOneMul}};
      if (is_const(e.rhs(), 1)) return {{e.lhs(), RuleName::SimplifyOneMul}};
      if (is_const(e.lhs(), 0) || is_const(e.rhs(), 0)) {
        return {{Expr::constant(0L), RuleName::SimplifyOneMul}};
      }
      return std::nullopt;
    case ExprKind::Pow:
      if (e.exponent() == 1) return {{e.operand(), RuleName::SimplifyOneMul}};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Outermost-leftmost application of one simplification rule.
std::optional<std::pair<Expr, RuleName>> reduce_first_simplify(const Expr& e) {
  if (auto here = match_local_rule(e)) return here;
  switch (e.kind()) {
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul: {
      if (auto left = reduce_first_simplify(e.lhs())) {
        Expr rebuilt = e.kind() == ExprKind::Add ? Expr::add(left->first, e.rhs())
                       : e.kind() == ExprKind::Sub ? Expr::sub(left->first, e.rhs())
                                                   : Expr::mul(left->first, e.rhs());
        return {{std::move(rebuilt), left->second}};
      }
      if (auto right = reduce_first_simplify(e.rhs())) {
        Expr rebuilt = e.kind() == ExprKind::Add ? Expr::add(e.lhs(), right->first)
                       : e.kind() == ExprKind::Sub ? Expr::sub(e.lhs(), right->first)
                                                   : Expr::mul(e.lhs(), right->first);
        return {{std::move(rebuilt), right->second}};
      }
      return std::nullopt;
    }
    case ExprKind::Pow: {
      if (auto inner = reduce_first_simplify(e.operand())) {
        return {{Expr::pow(inner->first, e.exponent()), inner->second}};
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

void run_simplify(Expr& current, std::vector<TraceStep>* trace) {
  while (auto step = reduce_first_simplify(current)) {
    if (trace) trace->push_back({step->second, current, step->first});
    current = std::move(step->first);
  }
  Expr canonical = nf_to_expr(to_nf(current));
  if (!(canonical == current)) {
    if (trace) trace->push_back({RuleName::CollectLikeTerms, current, canonical});
    current = std::move(canonical);
  }
}

}  // namespace

DiffResult poly_diff(const Expr& u, const VarName& x) {
  if (!is_polynomial(u)) {
    throw std::invalid_argument("poly_diff: expression is not a polynomial");
  }
  DiffResult out{Expr::deriv_marker(u, x), {}};
  while (auto step = reduce_first_marker(out.result)) {
    out.trace.push_back({step->second, out.result, step->first});
    out.result = std::move(step->first);
  }
  run_simplify(out.result, &out.trace);
  return out;
}

Expr simplify(const Expr& u) {
  if (!is_polynomial(u)) {
    throw std::invalid_argument("simplify: expression is not a polynomial");
  }
  Expr current = u;
  run_simplify(current, nullptr);
  return current;
}

// --- O_pd over syntactic values -----------------------------------------
//
// Deliberately separate code from the Expr engine above: the rules, the
// simplifier and the collection all operate on SynValue trees so that
// CompBehavior compares two independently built pipelines.

namespace {

bool is_con(const SynValue& s, long v) {
  return s.kind() == SynKind::Con && s.con_value() == v;
}

SynValue opd_diff(const SynValue& s, const VarName& x) {
  switch (s.kind()) {
    case SynKind::Con:
      return SynValue::con(Rational(0));
    case SynKind::Var:
      return SynValue::con(Rational(s.var_name() == x ? 1 : 0));
    case SynKind::Plus:
      return SynValue::plus(opd_diff(s.lhs(), x), opd_diff(s.rhs(), x));
    case SynKind::Minus:
      return SynValue::minus(opd_diff(s.lhs(), x), opd_diff(s.rhs(), x));
    case SynKind::Times:
      return SynValue::plus(SynValue::times(opd_diff(s.lhs(), x), s.rhs()),
                            SynValue::times(s.lhs(), opd_diff(s.rhs(), x)));
    case SynKind::Power: {
      std::uint32_t n = s.exponent();
      if (n == 0) return SynValue::con(Rational(0));
      return SynValue::times(
          SynValue::times(SynValue::con(Rational(n)), SynValue::power(s.base(), n - 1)),
          opd_diff(s.base(), x));
    }
  }
  throw std::logic_error("opd_diff: unreachable");
}

std::optional<SynValue> syn_simplify_once(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Plus:
      if (is_con(s.lhs(), 0)) return s.rhs();
      if (is_con(s.rhs(), 0)) return s.lhs();
      break;
    case SynKind::Times:
      if (is_con(s.lhs(), 1)) return s.rhs();
      if (is_con(s.rhs(), 1)) return s.lhs();
      if (is_con(s.lhs(), 0) || is_con(s.rhs(), 0)) return SynValue::con(Rational(0));
      break;
    case SynKind::Power:
      if (s.exponent() == 1) return s.base();
      break;
    default:
      break;
  }
  switch (s.kind()) {
    case SynKind::Plus:
    case SynKind::Minus:
    case SynKind::Times: {
      if (auto left = syn_simplify_once(s.lhs())) {
        switch (s.kind()) {
          case SynKind::Plus: return SynValue::plus(*left, s.rhs());
          case SynKind::Minus: return SynValue::minus(*left, s.rhs());
          default: return SynValue::times(*left, s.rhs());
        }
      }
      if (auto right = syn_simplify_once(s.rhs())) {
        switch (s.kind()) {
          case SynKind::Plus: return SynValue::plus(s.lhs(), *right);
          case SynKind::Minus: return SynValue::minus(s.lhs(), *right);
          default: return SynValue::times(s.lhs(), *right);
        }
      }
      return std::nullopt;
    }
    case SynKind::Power: {
      if (auto inner = syn_simplify_once(s.base())) {
        return SynValue::power(*inner, s.exponent());
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

PolyNF syn_to_nf(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Con: return PolyNF::constant(s.con_value());
    case SynKind::Var: return PolyNF::variable(s.var_name());
    case SynKind::Plus: return syn_to_nf(s.lhs()).add(syn_to_nf(s.rhs()));
    case SynKind::Minus: return syn_to_nf(s.lhs()).sub(syn_to_nf(s.rhs()));
    case SynKind::Times: return syn_to_nf(s.lhs()).mul(syn_to_nf(s.rhs()));
    case SynKind::Power: return syn_to_nf(s.base()).pow(s.exponent());
  }
  throw std::logic_error("syn_to_nf: unreachable");
}

SynValue syn_monomial(const Monomial& m) {
  SynValue result = SynValue::con(Rational(1));  // replaced by the first factor
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    SynValue factor =
        e == 1 ? SynValue::var(v) : SynValue::power(SynValue::var(v), e);
    if (first) {
      result = std::move(factor);
      first = false;
    } else {
      result = SynValue::times(std::move(result), std::move(factor));
    }
  }
  return result;
}

SynValue syn_term(const Rational& c, const Monomial& m) {
  if (m.is_unit()) return SynValue::con(c);
  if (c == 1) return syn_monomial(m);
  return SynValue::times(SynValue::con(c), syn_monomial(m));
}

// mirrors nf_to_expr so that eval_syn maps the result to the canonical
// expression form node for node
SynValue nf_to_syn(const PolyNF& p) {
  if (p.is_zero()) return SynValue::con(Rational(0));
  auto it = p.terms().rbegin();
  SynValue acc = syn_term(it->second, it->first);
  for (++it; it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (c > 0) {
      acc = SynValue::plus(std::move(acc), syn_term(c, m));
    } else {
      acc = SynValue::minus(std::move(acc), syn_term(-c, m));
    }
  }
  return acc;
}

}  // namespace

SynValue opd_apply(const SynValue& a, const SynValue& b) {
  if (!is_var_node(b)) {
    throw std::invalid_argument("opd_apply: second operand must be a var node");
  }
  VarName x = b.var_name();
  SynValue d = opd_diff(a, x);
  while (auto next = syn_simplify_once(d)) d = std::move(*next);
  return nf_to_syn(syn_to_nf(d));
}

}  // namespace polysyn
