#include "polysyn/synvalue.hpp"

#include <stdexcept>
#include <vector>

namespace polysyn {

struct SynValue::Node {
  SynKind kind;
  Rational value;             // Con
  std::string name;           // Var
  std::vector<SynValue> kids; // 0..2
  std::uint32_t exponent = 0; // Power
};

SynValue SynValue::make(Node n) {
  return SynValue(std::make_shared<const Node>(std::move(n)));
}

SynValue SynValue::con(Rational c) {
  return make({.kind = SynKind::Con, .value = std::move(c)});
}

SynValue SynValue::var(VarName v) {
  return make({.kind = SynKind::Var, .name = v.str()});
}

SynValue SynValue::plus(SynValue a, SynValue b) {
  return make({.kind = SynKind::Plus, .kids = {std::move(a), std::move(b)}});
}

SynValue SynValue::minus(SynValue a, SynValue b) {
  return make({.kind = SynKind::Minus, .kids = {std::move(a), std::move(b)}});
}

SynValue SynValue::times(SynValue a, SynValue b) {
  return make({.kind = SynKind::Times, .kids = {std::move(a), std::move(b)}});
}

SynValue SynValue::power(SynValue base, std::uint32_t n) {
  return make({.kind = SynKind::Power, .kids = {std::move(base)}, .exponent = n});
}

SynKind SynValue::kind() const { return node_->kind; }

const Rational& SynValue::con_value() const { return node_->value; }

VarName SynValue::var_name() const { return VarName(node_->name); }

const SynValue& SynValue::lhs() const { return node_->kids[0]; }

const SynValue& SynValue::rhs() const { return node_->kids[1]; }

const SynValue& SynValue::base() const { return node_->kids[0]; }

std::uint32_t SynValue::exponent() const { return node_->exponent; }

bool operator==(const SynValue& a, const SynValue& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case SynKind::Con: return x.value == y.value;
    case SynKind::Var: return x.name == y.name;
    case SynKind::Power:
      return x.exponent == y.exponent && x.kids[0] == y.kids[0];
    case SynKind::Plus:
    case SynKind::Minus:
    case SynKind::Times:
      return x.kids[0] == y.kids[0] && x.kids[1] == y.kids[1];
  }
  return false;
}

SynValue quote_poly(const Expr& u) {
  switch (u.kind()) {
    case ExprKind::Var: return SynValue::var(u.var_name());
    case ExprKind::Const: return SynValue::con(u.const_value());
    case ExprKind::Add: return SynValue::plus(quote_poly(u.lhs()), quote_poly(u.rhs()));
    case ExprKind::Sub: return SynValue::minus(quote_poly(u.lhs()), quote_poly(u.rhs()));
    case ExprKind::Mul: return SynValue::times(quote_poly(u.lhs()), quote_poly(u.rhs()));
    case ExprKind::Pow: return SynValue::power(quote_poly(u.operand()), u.exponent());
    default:
      throw std::invalid_argument("quote_poly: expression is not a polynomial");
  }
}

Expr eval_syn(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Con: return Expr::constant(s.con_value());
    case SynKind::Var: return Expr::var(s.var_name());
    case SynKind::Plus: return Expr::add(eval_syn(s.lhs()), eval_syn(s.rhs()));
    case SynKind::Minus: return Expr::sub(eval_syn(s.lhs()), eval_syn(s.rhs()));
    case SynKind::Times: return Expr::mul(eval_syn(s.lhs()), eval_syn(s.rhs()));
    case SynKind::Power: return Expr::pow(eval_syn(s.base()), s.exponent());
  }
  throw std::logic_error("eval_syn: unreachable");
}

bool is_var_node(const SynValue& s) { return s.kind() == SynKind::Var; }

bool is_poly_value(const SynValue&) { return true; }

std::size_t node_count(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Con:
    case SynKind::Var:
      return 1;
    case SynKind::Power:
      return 1 + node_count(s.base());
    case SynKind::Plus:
    case SynKind::Minus:
    case SynKind::Times:
      return 1 + node_count(s.lhs()) + node_count(s.rhs());
  }
  return 1;
}

}  // namespace polysyn
