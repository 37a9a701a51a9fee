#include "polysyn/synvalue.hpp"

#include "polysyn/generator.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace polysyn;
using namespace polysyn::test;

TEST_CASE("quote_poly is the structure-preserving encoding") {
  CHECK(quote_poly(P("x + 3")) ==
        SynValue::plus(SynValue::var(V("x")), SynValue::con(Rational(3))));
  CHECK(quote_poly(Expr::constant(7L)) == SynValue::con(Rational(7)));
  CHECK(quote_poly(P("x*(x^2+y)")) ==
        SynValue::times(SynValue::var(V("x")),
                        SynValue::plus(SynValue::power(SynValue::var(V("x")), 2),
                                       SynValue::var(V("y")))));
}

TEST_CASE("quote_poly rejects non-polynomials") {
  CHECK_THROWS_AS(quote_poly(Expr::quote(P("x"))), std::invalid_argument);
  CHECK_THROWS_AS(quote_poly(Expr::named_const("c")), std::invalid_argument);
}

TEST_CASE("eval_syn decodes syntax trees") {
  CHECK(eval_syn(SynValue::plus(SynValue::var(V("x")), SynValue::con(Rational(3)))) ==
        P("x + 3"));
  CHECK(eval_syn(SynValue::con(Rational(0))) == Expr::constant(0L));
}

TEST_CASE("disquotation: E(Q(u)) = u") {
  CHECK(eval_syn(quote_poly(P("x+3"))) == P("x+3"));
  CHECK(eval_syn(quote_poly(P("x*(x^2+y)"))) == P("x*(x^2+y)"));
  SplitMix64 rng(101);
  for (int i = 0; i < 500; ++i) {
    Expr u = gen_poly_expr(rng);
    CHECK(eval_syn(quote_poly(u)) == u);
  }
}

TEST_CASE("quotation is injective") {
  SplitMix64 rng(102);
  for (int i = 0; i < 300; ++i) {
    Expr u = gen_poly_expr(rng);
    Expr v = gen_poly_expr(rng);
    if (!(u == v)) CHECK_FALSE(quote_poly(u) == quote_poly(v));
  }
}

TEST_CASE("eval_syn is total and lands in the polynomial fragment") {
  SplitMix64 rng(103);
  for (int i = 0; i < 500; ++i) {
    SynValue s = gen_synvalue(rng);
    CHECK(is_polynomial(eval_syn(s)));
  }
}

TEST_CASE("quotation preserves node count") {
  SplitMix64 rng(104);
  for (int i = 0; i < 300; ++i) {
    Expr u = gen_poly_expr(rng);
    CHECK(node_count(quote_poly(u)) == node_count(u));
  }
}

TEST_CASE("is_var_node") {
  CHECK(is_var_node(SynValue::var(V("x"))));
  CHECK_FALSE(is_var_node(SynValue::con(Rational(3))));
  CHECK_FALSE(is_var_node(SynValue::plus(SynValue::var(V("x")), SynValue::con(Rational(3)))));
}

TEST_CASE("is_poly_value holds for every syntactic value") {
  CHECK(is_poly_value(SynValue::var(V("x"))));
  CHECK(is_poly_value(SynValue::power(SynValue::con(Rational(2)), 3)));
  CHECK(is_poly_value(SynValue::times(SynValue::var(V("x")), SynValue::var(V("y")))));
}
