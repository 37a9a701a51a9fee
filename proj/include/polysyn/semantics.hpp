#pragma once

#include "polysyn/expr.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace polysyn {

// Hard cap on the number of monomials any normal form may hold.
inline constexpr std::size_t kMonomialBudget = 1'000'000;

class MonomialBudgetError : public std::runtime_error {
 public:
  MonomialBudgetError()
      : std::runtime_error("polynomial expansion exceeds the monomial budget") {}
};

// Power product over variables; exponents are strictly positive (an absent
// variable has exponent 0). The default-constructed monomial is the unit.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(const VarName& v, std::uint32_t exp = 1);

  const std::map<VarName, std::uint32_t>& exponents() const { return exps_; }
  std::uint64_t total_degree() const;
  std::uint32_t exponent_of(const VarName& v) const;
  bool contains(const VarName& v) const { return exps_.count(v) != 0; }
  bool is_unit() const { return exps_.empty(); }
  Monomial times(const Monomial& o) const;
  Monomial divide_once(const VarName& v) const;  // pre: contains(v)
  std::string to_string() const;                 // "x^2*y", "1" for the unit

  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::map<VarName, std::uint32_t> exps_;
};

// Graded lexicographic order: lower total degree first, ties broken
// alphabetically (the alphabetically earliest differing variable with the
// larger exponent wins).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

// Canonical sparse normal form: monomial -> nonzero coefficient. Two normal
// forms are equal as maps iff they denote the same polynomial function.
class PolyNF {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexLess>;

  PolyNF() = default;  // zero polynomial
  static PolyNF constant(Rational c);
  static PolyNF variable(const VarName& v);

  PolyNF add(const PolyNF& o) const;
  PolyNF sub(const PolyNF& o) const;
  PolyNF mul(const PolyNF& o) const;  // throws MonomialBudgetError past the cap
  PolyNF pow(std::uint32_t n) const;

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;

  // accumulate c * m, dropping the term if the sum cancels
  void add_term(const Monomial& m, const Rational& c);

  friend bool operator==(const PolyNF& a, const PolyNF& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
};

using Assignment = std::map<VarName, Rational>;

// V_sem restricted to polynomials: expand into the canonical sparse form.
// Ring homomorphic. Throws std::invalid_argument on non-polynomial input.
PolyNF to_nf(const Expr& u);

// Exact value of p at a; throws std::invalid_argument when a variable of p
// has no assignment.
Rational nf_eval(const PolyNF& p, const Assignment& a);

// Term-by-term partial derivative: d/dx of c*x^n*m = c*n*x^(n-1)*m.
PolyNF nf_derivative(const PolyNF& p, const VarName& x);

// The limit definition, computed exactly: the difference quotient
// (u[x := x+h] - u)/h is a polynomial in a fresh h, so the limit at h -> 0
// is its h-free part. Independent of nf_derivative by construction.
PolyNF limit_derivative(const Expr& u, const VarName& x);

bool nf_equal(const PolyNF& p, const PolyNF& q);

// Canonical expression form of a normal form: monomials in descending
// graded-lex order (variables alphabetical, constant term last), sums folded
// left-associatively with '-' absorbing negative coefficients, unit
// coefficients and exponents elided. This is the like-term-collection target.
Expr nf_to_expr(const PolyNF& p);

Rational rat_pow(const Rational& base, std::uint32_t n);

}  // namespace polysyn
