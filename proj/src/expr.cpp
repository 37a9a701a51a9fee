#include "polysyn/expr.hpp"

#include <stdexcept>

namespace polysyn {

bool is_valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

VarName::VarName(std::string name) : name_(std::move(name)) {
  if (!is_valid_identifier(name_)) {
    throw std::invalid_argument("invalid variable name: '" + name_ + "'");
  }
}

std::string to_string(TypeTag t) {
  switch (t) {
    case TypeTag::Real: return "real";
    case TypeTag::Syn: return "syn";
    case TypeTag::Bool: return "bool";
  }
  return "?";
}

struct Expr::Node {
  ExprKind kind;
  Rational value;           // Const
  std::string name;         // Var / NamedConst / Deriv variable
  std::vector<Expr> kids;   // 0..2 children
  std::uint32_t exponent = 0;
  TypeTag tag = TypeTag::Real;
};

Expr Expr::make(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

Expr Expr::var(VarName v) {
  return make({.kind = ExprKind::Var, .name = v.str()});
}

Expr Expr::var(const std::string& name) { return var(VarName(name)); }

Expr Expr::constant(Rational c) {
  return make({.kind = ExprKind::Const, .value = std::move(c)});
}

Expr Expr::add(Expr a, Expr b) {
  return make({.kind = ExprKind::Add, .kids = {std::move(a), std::move(b)}});
}

Expr Expr::sub(Expr a, Expr b) {
  return make({.kind = ExprKind::Sub, .kids = {std::move(a), std::move(b)}});
}

Expr Expr::mul(Expr a, Expr b) {
  return make({.kind = ExprKind::Mul, .kids = {std::move(a), std::move(b)}});
}

Expr Expr::pow(Expr base, std::uint32_t n) {
  return make({.kind = ExprKind::Pow, .kids = {std::move(base)}, .exponent = n});
}

Expr Expr::quote(Expr e) {
  return make({.kind = ExprKind::Quote, .kids = {std::move(e)}});
}

Expr Expr::eval(Expr e, TypeTag t) {
  return make({.kind = ExprKind::Eval, .kids = {std::move(e)}, .tag = t});
}

Expr Expr::named_const(const std::string& name) {
  if (!is_valid_identifier(name)) {
    throw std::invalid_argument("invalid constant name: '" + name + "'");
  }
  return make({.kind = ExprKind::NamedConst, .name = name});
}

Expr Expr::opd_apply(Expr a, Expr b) {
  return make({.kind = ExprKind::OpdApply, .kids = {std::move(a), std::move(b)}});
}

Expr Expr::logical_not(Expr e) {
  return make({.kind = ExprKind::Not, .kids = {std::move(e)}});
}

Expr Expr::syn_eq(Expr a, Expr b) {
  return make({.kind = ExprKind::SynEq, .kids = {std::move(a), std::move(b)}});
}

Expr Expr::deriv_marker(Expr e, VarName v) {
  return make({.kind = ExprKind::Deriv, .name = v.str(), .kids = {std::move(e)}});
}

ExprKind Expr::kind() const { return node_->kind; }

VarName Expr::var_name() const { return VarName(node_->name); }

const Rational& Expr::const_value() const { return node_->value; }

const std::string& Expr::const_name() const { return node_->name; }

const Expr& Expr::lhs() const { return node_->kids[0]; }

const Expr& Expr::rhs() const { return node_->kids[1]; }

const Expr& Expr::operand() const { return node_->kids[0]; }

std::uint32_t Expr::exponent() const { return node_->exponent; }

TypeTag Expr::eval_tag() const { return node_->tag; }

VarName Expr::deriv_var() const { return VarName(node_->name); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ExprKind::Var:
    case ExprKind::NamedConst:
      return x.name == y.name;
    case ExprKind::Const:
      return x.value == y.value;
    case ExprKind::Pow:
      return x.exponent == y.exponent && x.kids[0] == y.kids[0];
    case ExprKind::Eval:
      return x.tag == y.tag && x.kids[0] == y.kids[0];
    case ExprKind::Deriv:
      return x.name == y.name && x.kids[0] == y.kids[0];
    case ExprKind::Quote:
    case ExprKind::Not:
      return x.kids[0] == y.kids[0];
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::OpdApply:
    case ExprKind::SynEq:
      return x.kids[0] == y.kids[0] && x.kids[1] == y.kids[1];
  }
  return false;
}

bool expr_equal(const Expr& a, const Expr& b) { return a == b; }

bool is_polynomial(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const:
      return true;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
      return is_polynomial(e.lhs()) && is_polynomial(e.rhs());
    case ExprKind::Pow:
      return is_polynomial(e.operand());
    default:
      return false;
  }
}

namespace {

void collect_free_vars(const Expr& e, std::set<VarName>& out) {
  switch (e.kind()) {
    case ExprKind::Var:
      out.insert(e.var_name());
      return;
    case ExprKind::Const:
    case ExprKind::NamedConst:
    case ExprKind::Quote:  // quotation is closed
      return;
    case ExprKind::Pow:
    case ExprKind::Eval:
    case ExprKind::Not:
      collect_free_vars(e.operand(), out);
      return;
    case ExprKind::Deriv:
      out.insert(e.deriv_var());
      collect_free_vars(e.operand(), out);
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::OpdApply:
    case ExprKind::SynEq:
      collect_free_vars(e.lhs(), out);
      collect_free_vars(e.rhs(), out);
      return;
  }
}

}  // namespace

std::set<VarName> free_vars(const Expr& e) {
  std::set<VarName> out;
  collect_free_vars(e, out);
  return out;
}

Expr substitute(const Expr& e, const VarName& v, const Expr& r) {
  if (!is_polynomial(r)) {
    throw std::invalid_argument("substitute: replacement is not a polynomial");
  }
  switch (e.kind()) {
    case ExprKind::Var:
      return e.var_name() == v ? r : e;
    case ExprKind::Const:
    case ExprKind::NamedConst:
    case ExprKind::Quote:  // opaque
      return e;
    case ExprKind::Add:
      return Expr::add(substitute(e.lhs(), v, r), substitute(e.rhs(), v, r));
    case ExprKind::Sub:
      return Expr::sub(substitute(e.lhs(), v, r), substitute(e.rhs(), v, r));
    case ExprKind::Mul:
      return Expr::mul(substitute(e.lhs(), v, r), substitute(e.rhs(), v, r));
    case ExprKind::Pow:
      return Expr::pow(substitute(e.operand(), v, r), e.exponent());
    case ExprKind::Eval:
      return Expr::eval(substitute(e.operand(), v, r), e.eval_tag());
    case ExprKind::Not:
      return Expr::logical_not(substitute(e.operand(), v, r));
    case ExprKind::OpdApply:
      return Expr::opd_apply(substitute(e.lhs(), v, r), substitute(e.rhs(), v, r));
    case ExprKind::SynEq:
      return Expr::syn_eq(substitute(e.lhs(), v, r), substitute(e.rhs(), v, r));
    case ExprKind::Deriv:
      throw std::invalid_argument("substitute: expression contains a derivative marker");
  }
  throw std::logic_error("substitute: unreachable");
}

std::size_t node_count(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const:
    case ExprKind::NamedConst:
      return 1;
    case ExprKind::Pow:
    case ExprKind::Quote:
    case ExprKind::Eval:
    case ExprKind::Not:
    case ExprKind::Deriv:
      return 1 + node_count(e.operand());
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::OpdApply:
    case ExprKind::SynEq:
      return 1 + node_count(e.lhs()) + node_count(e.rhs());
  }
  return 1;
}

}  // namespace polysyn
