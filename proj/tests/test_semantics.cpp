#include "polysyn/semantics.hpp"

#include "polysyn/generator.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace polysyn;
using namespace polysyn::test;

namespace {

PolyNF nf_of_terms(std::initializer_list<std::pair<Monomial, Rational>> terms) {
  PolyNF p;
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

Monomial mono(std::initializer_list<std::pair<const char*, std::uint32_t>> vars) {
  Monomial m;
  for (const auto& [v, e] : vars) m = m.times(Monomial::variable(VarName(v), e));
  return m;
}

}  // namespace

TEST_CASE("to_nf expands to the canonical sparse form") {
  CHECK(to_nf(P("x*(x^2+y)")) ==
        nf_of_terms({{mono({{"x", 3}}), 1}, {mono({{"x", 1}, {"y", 1}}), 1}}));
  CHECK(to_nf(P("(x+1)^2 - x^2 - 2*x - 1")) == PolyNF());
  CHECK(to_nf(P("3*x^2 + y")) ==
        nf_of_terms({{mono({{"x", 2}}), 3}, {mono({{"y", 1}}), 1}}));
  CHECK_THROWS_AS(to_nf(Expr::quote(P("x"))), std::invalid_argument);
}

TEST_CASE("to_nf enforces the monomial budget") {
  // sum of 1100 powers of x times sum of 1100 powers of y: 1.21e6 distinct
  // monomials, past the 1e6 cap
  Expr gx = Expr::constant(1L);
  Expr gy = Expr::constant(1L);
  for (std::uint32_t i = 1; i <= 1100; ++i) {
    gx = Expr::add(std::move(gx), Expr::pow(Expr::var("x"), i));
    gy = Expr::add(std::move(gy), Expr::pow(Expr::var("y"), i));
  }
  CHECK_THROWS_AS(to_nf(Expr::mul(gx, gy)), MonomialBudgetError);
}

TEST_CASE("nf_eval computes exact values") {
  PolyNF p = nf_of_terms({{mono({{"x", 2}}), 3}, {mono({{"y", 1}}), 1}});
  Assignment a{{V("x"), Rational(2)}, {V("y"), Rational(5)}};
  CHECK(nf_eval(p, a) == Rational(17));
  CHECK(nf_eval(PolyNF(), a) == Rational(0));
  CHECK(nf_eval(PolyNF::variable(V("x")), {{V("x"), Rational(2, 5)}}) == Rational(2, 5));
  CHECK_THROWS_AS(nf_eval(p, Assignment{{V("x"), Rational(1)}}), std::invalid_argument);
}

TEST_CASE("nf_derivative differentiates term by term") {
  CHECK(nf_derivative(to_nf(P("x*(x^2+y)")), V("x")) == to_nf(P("3*x^2 + y")));
  CHECK(nf_derivative(to_nf(P("y")), V("x")) == PolyNF());
  CHECK(nf_derivative(nf_of_terms({{mono({{"x", 5}}), 2}}), V("x")) ==
        nf_of_terms({{mono({{"x", 4}}), 10}}));
}

TEST_CASE("limit_derivative computes the difference-quotient limit exactly") {
  // ((x+h)^2 - x^2)/h = 2x + h, which is 2x at h = 0
  CHECK(limit_derivative(P("x^2"), V("x")) == nf_of_terms({{mono({{"x", 1}}), 2}}));
  CHECK(limit_derivative(Expr::constant(5L), V("x")) == PolyNF());
  CHECK(limit_derivative(P("x*(x^2+y)"), V("x")) == to_nf(P("3*x^2 + y")));
  CHECK_THROWS_AS(limit_derivative(Expr::quote(P("x")), V("x")), std::invalid_argument);
}

TEST_CASE("limit_derivative picks a fresh h") {
  // h is taken: the internal variable must not collide
  CHECK(limit_derivative(P("h * x^2"), V("x")) ==
        nf_of_terms({{mono({{"h", 1}, {"x", 1}}), 2}}));
  CHECK(limit_derivative(P("h * h1 * x"), V("x")) ==
        nf_of_terms({{mono({{"h", 1}, {"h1", 1}}), 1}}));
}

TEST_CASE("the two derivative oracles agree") {
  SplitMix64 rng(201);
  for (int i = 0; i < 500; ++i) {
    Expr u = gen_poly_expr(rng);
    VarName x = gen_variable(rng);
    CHECK(nf_equal(limit_derivative(u, x), nf_derivative(to_nf(u), x)));
  }
}

TEST_CASE("nf_equal is semantic equality") {
  CHECK(nf_equal(to_nf(P("x+y")), to_nf(P("y+x"))));
  CHECK(nf_equal(to_nf(P("x")), to_nf(P("x^1"))));
  CHECK_FALSE(nf_equal(to_nf(P("x")), to_nf(P("y"))));
}

TEST_CASE("to_nf is a ring homomorphism") {
  SplitMix64 rng(202);
  for (int i = 0; i < 200; ++i) {
    Expr a = gen_poly_expr(rng);
    Expr b = gen_poly_expr(rng);
    CHECK(to_nf(Expr::add(a, b)) == to_nf(a).add(to_nf(b)));
    CHECK(to_nf(Expr::sub(a, b)) == to_nf(a).sub(to_nf(b)));
    CHECK(to_nf(Expr::mul(a, b)) == to_nf(a).mul(to_nf(b)));
    auto n = static_cast<std::uint32_t>(rng.below(4));
    CHECK(to_nf(Expr::pow(a, n)) == to_nf(a).pow(n));
  }
}

TEST_CASE("point evaluation agrees with direct recursive evaluation") {
  SplitMix64 rng(203);
  for (int i = 0; i < 200; ++i) {
    Expr u = gen_poly_expr(rng);
    Assignment a = gen_assignment(rng, u);
    CHECK(nf_eval(to_nf(u), a) == eval_direct(u, a));
  }
}

TEST_CASE("Leibniz rule at the normal-form level") {
  SplitMix64 rng(204);
  for (int i = 0; i < 200; ++i) {
    PolyNF p = to_nf(gen_poly_expr(rng));
    PolyNF q = to_nf(gen_poly_expr(rng));
    VarName x = gen_variable(rng);
    CHECK(nf_derivative(p.mul(q), x) ==
          nf_derivative(p, x).mul(q).add(p.mul(nf_derivative(q, x))));
  }
}

TEST_CASE("monomials never store zero exponents") {
  CHECK(Monomial::variable(V("x"), 0).is_unit());
  Monomial m = mono({{"x", 1}});
  CHECK(m.divide_once(V("x")).is_unit());
  CHECK(m.total_degree() == 1);
  CHECK(mono({{"x", 2}, {"y", 1}}).total_degree() == 3);
  CHECK(mono({{"x", 2}}).to_string() == "x^2");
  CHECK(Monomial().to_string() == "1");
}

TEST_CASE("graded-lex order ranks by degree, then alphabetically") {
  GrlexLess less;
  CHECK(less(mono({{"y", 1}}), mono({{"x", 2}})));        // degree 1 < 2
  CHECK(less(mono({{"x", 1}, {"y", 1}}), mono({{"x", 2}})));  // same degree, x^2 wins
  CHECK(less(mono({{"y", 2}}), mono({{"x", 1},{"y", 1}})));
  CHECK(less(Monomial(), mono({{"x", 1}})));
  CHECK_FALSE(less(mono({{"x", 1}}), mono({{"x", 1}})));
}

TEST_CASE("nf_to_expr produces the canonical collected form") {
  CHECK(print_expr(nf_to_expr(to_nf(P("x^2 + y + 2*x^2")))) == "3 * x^2 + y");
  CHECK(print_expr(nf_to_expr(PolyNF())) == "0");
  CHECK(print_expr(nf_to_expr(to_nf(P("y + x")))) == "x + y");
  CHECK(print_expr(nf_to_expr(to_nf(P("2 + x")))) == "x + 2");       // constant last
  CHECK(print_expr(nf_to_expr(to_nf(P("0 - x + 3")))) == "-1 * x + 3");
  CHECK(print_expr(nf_to_expr(to_nf(P("x^2 - y")))) == "x^2 - y");
  // round-trips through the parser
  SplitMix64 rng(205);
  for (int i = 0; i < 200; ++i) {
    PolyNF p = to_nf(gen_poly_expr(rng));
    Expr canonical = nf_to_expr(p);
    CHECK(to_nf(canonical) == p);
    CHECK(P(print_expr(canonical)) == canonical);
  }
}
