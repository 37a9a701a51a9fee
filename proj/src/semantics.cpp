#include "polysyn/semantics.hpp"

namespace polysyn {

Monomial Monomial::variable(const VarName& v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.exps_[v] = exp;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

std::uint32_t Monomial::exponent_of(const VarName& v) const {
  auto it = exps_.find(v);
  return it == exps_.end() ? 0 : it->second;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r = *this;
  for (const auto& [v, e] : o.exps_) r.exps_[v] += e;
  return r;
}

Monomial Monomial::divide_once(const VarName& v) const {
  Monomial r = *this;
  auto it = r.exps_.find(v);
  if (it == r.exps_.end()) {
    throw std::logic_error("divide_once: monomial does not contain " + v.str());
  }
  if (--it->second == 0) r.exps_.erase(it);
  return r;
}

std::string Monomial::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : exps_) {
    if (!s.empty()) s += "*";
    s += v.str();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  std::uint64_t da = a.total_degree();
  std::uint64_t db = b.total_degree();
  if (da != db) return da < db;
  auto ia = a.exponents().begin(), ea = a.exponents().end();
  auto ib = b.exponents().begin(), eb = b.exponents().end();
  while (ia != ea && ib != eb) {
    if (ia->first != ib->first) {
      // whoever owns the alphabetically earlier variable is lex-greater
      return ib->first < ia->first;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ia == ea && ib != eb;
}

PolyNF PolyNF::constant(Rational c) {
  PolyNF p;
  p.add_term(Monomial(), c);
  return p;
}

PolyNF PolyNF::variable(const VarName& v) {
  PolyNF p;
  p.add_term(Monomial::variable(v), Rational(1));
  return p;
}

void PolyNF::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.size() > kMonomialBudget) throw MonomialBudgetError();
}

PolyNF PolyNF::add(const PolyNF& o) const {
  PolyNF r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

PolyNF PolyNF::sub(const PolyNF& o) const {
  PolyNF r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

PolyNF PolyNF::mul(const PolyNF& o) const {
  PolyNF r;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma.times(mb), ca * cb);
    }
  }
  return r;
}

PolyNF PolyNF::pow(std::uint32_t n) const {
  PolyNF result = PolyNF::constant(Rational(1));
  PolyNF base = *this;
  while (n > 0) {
    if (n & 1u) result = result.mul(base);
    n >>= 1u;
    if (n > 0) base = base.mul(base);
  }
  return result;
}

Rational PolyNF::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

PolyNF to_nf(const Expr& u) {
  switch (u.kind()) {
    case ExprKind::Var:
      return PolyNF::variable(u.var_name());
    case ExprKind::Const:
      return PolyNF::constant(u.const_value());
    case ExprKind::Add:
      return to_nf(u.lhs()).add(to_nf(u.rhs()));
    case ExprKind::Sub:
      return to_nf(u.lhs()).sub(to_nf(u.rhs()));
    case ExprKind::Mul:
      return to_nf(u.lhs()).mul(to_nf(u.rhs()));
    case ExprKind::Pow:
      return to_nf(u.operand()).pow(u.exponent());
    default:
      throw std::invalid_argument("to_nf: expression is not a polynomial");
  }
}

Rational rat_pow(const Rational& base, std::uint32_t n) {
  Rational result(1);
  Rational b = base;
  while (n > 0) {
    if (n & 1u) result *= b;
    n >>= 1u;
    if (n > 0) b *= b;
  }
  return result;
}

Rational nf_eval(const PolyNF& p, const Assignment& a) {
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational prod = c;
    for (const auto& [v, e] : m.exponents()) {
      auto it = a.find(v);
      if (it == a.end()) {
        throw std::invalid_argument("nf_eval: no assignment for variable " + v.str());
      }
      prod *= rat_pow(it->second, e);
    }
    sum += prod;
  }
  return sum;
}

PolyNF nf_derivative(const PolyNF& p, const VarName& x) {
  PolyNF r;
  for (const auto& [m, c] : p.terms()) {
    std::uint32_t e = m.exponent_of(x);
    if (e == 0) continue;
    r.add_term(m.divide_once(x), c * e);
  }
  return r;
}

PolyNF limit_derivative(const Expr& u, const VarName& x) {
  if (!is_polynomial(u)) {
    throw std::invalid_argument("limit_derivative: expression is not a polynomial");
  }
  // fresh h, h1, h2, ... not occurring in u
  std::set<VarName> fv = free_vars(u);
  VarName h("h");
  for (unsigned i = 1; fv.count(h) != 0; ++i) {
    h = VarName("h" + std::to_string(i));
  }

  Expr shifted = substitute(u, x, Expr::add(Expr::var(x), Expr::var(h)));
  PolyNF numerator = to_nf(shifted).sub(to_nf(u));

  // (u[x := x+h] - u) is divisible by h; its h-free part after the division
  // is the limit at h -> 0
  PolyNF derivative;
  for (const auto& [m, c] : numerator.terms()) {
    if (!m.contains(h)) {
      throw std::logic_error("limit_derivative: numerator monomial lacks " + h.str());
    }
    Monomial q = m.divide_once(h);
    if (!q.contains(h)) derivative.add_term(q, c);
  }
  return derivative;
}

bool nf_equal(const PolyNF& p, const PolyNF& q) { return p == q; }

namespace {

Expr monomial_expr(const Monomial& m) {
  Expr result = Expr::constant(1L);  // replaced by the first factor
  bool first = true;
  for (const auto& [v, e] : m.exponents()) {
    Expr factor = e == 1 ? Expr::var(v) : Expr::pow(Expr::var(v), e);
    if (first) {
      result = std::move(factor);
      first = false;
    } else {
      result = Expr::mul(std::move(result), std::move(factor));
    }
  }
  return result;
}

Expr term_expr(const Rational& c, const Monomial& m) {
  if (m.is_unit()) return Expr::constant(c);
  if (c == 1) return monomial_expr(m);
  return Expr::mul(Expr::constant(c), monomial_expr(m));
}

}  // namespace

Expr nf_to_expr(const PolyNF& p) {
  if (p.is_zero()) return Expr::constant(0L);
  auto it = p.terms().rbegin();
  Expr acc = term_expr(it->second, it->first);
  for (++it; it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    if (c > 0) {
      acc = Expr::add(std::move(acc), term_expr(c, m));
    } else {
      acc = Expr::sub(std::move(acc), term_expr(-c, m));
    }
  }
  return acc;
}

}  // namespace polysyn
