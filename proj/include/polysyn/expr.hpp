#pragma once

#include "polysyn/rational.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace polysyn {

// Object-language variable: [a-zA-Z][a-zA-Z0-9_]*.
class VarName {
 public:
  explicit VarName(std::string name);  // throws std::invalid_argument
  const std::string& str() const { return name_; }
  auto operator<=>(const VarName&) const = default;

 private:
  std::string name_;
};

bool is_valid_identifier(const std::string& s);

// Result types of the extended (global-mode) language. The order is the
// printing/comparison order.
enum class TypeTag { Real, Syn, Bool };

std::string to_string(TypeTag t);

enum class ExprKind {
  Var,
  Const,
  Add,
  Sub,
  Mul,
  Pow,
  // global-mode forms
  Quote,
  Eval,
  NamedConst,
  OpdApply,  // built-in differentiation operator applied to two syn operands
  Not,
  SynEq,
  // Pending-derivative marker d/dv(e). Created only by the rewrite engine in
  // polydiff; it appears in rewrite traces but never in a final result, has
  // no concrete input syntax, and is not a polynomial constructor.
  Deriv,
};

// Immutable expression tree with value semantics; copies share nodes and are
// safe to pass between threads.
class Expr {
 public:
  static Expr var(VarName v);
  static Expr var(const std::string& name);
  static Expr constant(Rational c);
  static Expr constant(long n) { return constant(Rational(n)); }
  static Expr add(Expr a, Expr b);
  static Expr sub(Expr a, Expr b);
  static Expr mul(Expr a, Expr b);
  static Expr pow(Expr base, std::uint32_t n);
  static Expr quote(Expr e);
  static Expr eval(Expr e, TypeTag t);
  static Expr named_const(const std::string& name);
  static Expr opd_apply(Expr a, Expr b);
  static Expr logical_not(Expr e);
  static Expr syn_eq(Expr a, Expr b);
  static Expr deriv_marker(Expr e, VarName v);

  ExprKind kind() const;
  VarName var_name() const;              // Var
  const Rational& const_value() const;   // Const
  const std::string& const_name() const; // NamedConst
  const Expr& lhs() const;               // Add/Sub/Mul/OpdApply/SynEq
  const Expr& rhs() const;
  const Expr& operand() const;           // Pow/Quote/Eval/Not/Deriv
  std::uint32_t exponent() const;        // Pow
  TypeTag eval_tag() const;              // Eval
  VarName deriv_var() const;             // Deriv

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  static Expr make(Node n);
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Structural equality; exact on rationals (constants are stored reduced).
bool expr_equal(const Expr& a, const Expr& b);

// Member of L_poly: only Var/Const/Add/Sub/Mul/Pow nodes.
bool is_polynomial(const Expr& e);

// Syntactic free variables. Quote(e) contributes nothing; Eval(e, t)
// contributes free_vars(e) — the purely syntactic approximation (the
// semantic notion under eval is not computable here; see demo
// variable-problem for the divergence).
std::set<VarName> free_vars(const Expr& e);

// Replaces free occurrences of v by r; does not descend into Quote nodes.
// Throws std::invalid_argument if r is not polynomial.
Expr substitute(const Expr& e, const VarName& v, const Expr& r);

std::size_t node_count(const Expr& e);

}  // namespace polysyn
