#pragma once

#include "polysyn/expr.hpp"

#include <cstdint>
#include <memory>

namespace polysyn {

enum class SynKind { Con, Var, Plus, Minus, Times, Power };

// Member of the inductive syntactic domain S: the syntax trees of the
// polynomials. Immutable, value semantics.
class SynValue {
 public:
  static SynValue con(Rational c);
  static SynValue var(VarName v);
  static SynValue plus(SynValue a, SynValue b);
  static SynValue minus(SynValue a, SynValue b);
  static SynValue times(SynValue a, SynValue b);
  static SynValue power(SynValue base, std::uint32_t n);

  SynKind kind() const;
  const Rational& con_value() const;  // Con
  VarName var_name() const;           // Var
  const SynValue& lhs() const;        // Plus/Minus/Times
  const SynValue& rhs() const;
  const SynValue& base() const;       // Power
  std::uint32_t exponent() const;     // Power

  friend bool operator==(const SynValue& a, const SynValue& b);

 private:
  struct Node;
  static SynValue make(Node n);
  explicit SynValue(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Q: structure-preserving encoding of a polynomial as its syntax tree.
// Injective and total on L_poly; throws std::invalid_argument otherwise.
SynValue quote_poly(const Expr& u);

// E: the unique polynomial whose syntax tree is s. Total; left inverse of
// quote_poly.
Expr eval_syn(const SynValue& s);

bool is_var_node(const SynValue& s);

// True for every SynValue: this type is exactly the polynomial syntax trees.
// Named predicate because the global mode's syntactic domain is larger.
bool is_poly_value(const SynValue& s);

std::size_t node_count(const SynValue& s);

}  // namespace polysyn
