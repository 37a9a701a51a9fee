#include "polysyn/global.hpp"

#include "polysyn/parser.hpp"
#include "polysyn/polydiff.hpp"

#include <json.hpp>

namespace polysyn {

std::string GlobalSyn::to_string() const {
  if (is_poly()) return print_synvalue(poly());
  return "quote(" + const_name() + ")";
}

TypeTag GlobalValue::tag() const {
  switch (rep_.index()) {
    case 0: return TypeTag::Real;
    case 1: return TypeTag::Syn;
    default: return TypeTag::Bool;
  }
}

std::string GlobalValue::to_string() const {
  switch (tag()) {
    case TypeTag::Real: return rat_to_string(as_real());
    case TypeTag::Syn: return as_syn().to_string();
    case TypeTag::Bool: return as_bool() ? "true" : "false";
  }
  return "?";
}

namespace {

// a body may mention the constant being defined only underneath a Quote
void check_references(const Expr& e, const std::string& self, const DefTable& defs,
                      bool under_quote) {
  switch (e.kind()) {
    case ExprKind::NamedConst: {
      const std::string& n = e.const_name();
      if (n == self) {
        if (!under_quote) {
          throw std::invalid_argument("definition of '" + self +
                                      "' references itself outside a quotation");
        }
        return;
      }
      if (!defs.contains(n)) {
        throw std::invalid_argument("definition references unknown constant '" + n + "'");
      }
      return;
    }
    case ExprKind::Quote:
      check_references(e.operand(), self, defs, true);
      return;
    case ExprKind::Pow:
    case ExprKind::Eval:
    case ExprKind::Not:
      check_references(e.operand(), self, defs, under_quote);
      return;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::OpdApply:
    case ExprKind::SynEq:
      check_references(e.lhs(), self, defs, under_quote);
      check_references(e.rhs(), self, defs, under_quote);
      return;
    default:
      return;
  }
}

}  // namespace

void DefTable::define(const std::string& name, TypeTag type, Expr body) {
  if (!is_valid_identifier(name)) {
    throw std::invalid_argument("invalid constant name: '" + name + "'");
  }
  if (entries_.count(name)) {
    throw std::invalid_argument("constant '" + name + "' is already defined");
  }
  check_references(body, name, *this, false);
  entries_.emplace(name, Entry{type, body});
  order_.push_back(name);
  try {
    TypeTag actual = typecheck(body, *this);
    if (actual != type) {
      throw TypeError("definition body has type " + to_string(actual) +
                          ", declared " + to_string(type),
                      print_expr(body));
    }
  } catch (...) {
    entries_.erase(name);
    order_.pop_back();
    throw;
  }
}

bool DefTable::contains(const std::string& name) const { return entries_.count(name) != 0; }

TypeTag DefTable::type_of(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw std::invalid_argument("unknown constant '" + name + "'");
  }
  return it->second.type;
}

const Expr& DefTable::body_of(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw std::invalid_argument("unknown constant '" + name + "'");
  }
  return it->second.body;
}

namespace {

void require(const Expr& sub, TypeTag expected, const DefTable& defs) {
  TypeTag actual = typecheck(sub, defs);
  if (actual != expected) {
    throw TypeError("expected " + to_string(expected) + ", found " + to_string(actual),
                    print_expr(sub));
  }
}

bool quotable(const Expr& e) {
  return is_polynomial(e) || e.kind() == ExprKind::NamedConst;
}

}  // namespace

TypeTag typecheck(const Expr& e, const DefTable& defs) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const:
      return TypeTag::Real;
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
      require(e.lhs(), TypeTag::Real, defs);
      require(e.rhs(), TypeTag::Real, defs);
      return TypeTag::Real;
    case ExprKind::Pow:
      require(e.operand(), TypeTag::Real, defs);
      return TypeTag::Real;
    case ExprKind::Quote:
      if (!quotable(e.operand())) {
        throw TypeError("quote body must be a polynomial or a named constant",
                        print_expr(e.operand()));
      }
      return TypeTag::Syn;
    case ExprKind::Eval:
      require(e.operand(), TypeTag::Syn, defs);
      return e.eval_tag();
    case ExprKind::NamedConst:
      if (!defs.contains(e.const_name())) {
        throw TypeError("unknown constant", e.const_name());
      }
      return defs.type_of(e.const_name());
    case ExprKind::OpdApply:
      require(e.lhs(), TypeTag::Syn, defs);
      require(e.rhs(), TypeTag::Syn, defs);
      return TypeTag::Syn;
    case ExprKind::Not:
      require(e.operand(), TypeTag::Bool, defs);
      return TypeTag::Bool;
    case ExprKind::SynEq:
      require(e.lhs(), TypeTag::Syn, defs);
      require(e.rhs(), TypeTag::Syn, defs);
      return TypeTag::Bool;
    case ExprKind::Deriv:
      throw TypeError("derivative markers are not part of the typed language",
                      print_expr(e));
  }
  throw std::logic_error("typecheck: unreachable");
}

namespace {

GlobalValue interpret_ref(const Expr& e, const Assignment& env, const DefTable& defs,
                          Budget& b) {
  return interpret(e, env, defs, b);
}

}  // namespace

// Eval unfoldings, definition unfoldings and negations are all handled
// iteratively in one loop, so divergent evaluation (the liar regress) burns
// budget, not stack: a cycle like LIAR -> not(eval(quote(LIAR) : bool))
// re-enters the loop with zero accumulated frames per unfolding.
GlobalValue interpret(Expr e, const Assignment& env, const DefTable& defs, Budget& b) {
  bool negate = false;
  auto finish = [&negate](GlobalValue v) {
    if (!negate) return v;
    if (v.tag() != TypeTag::Bool) {
      throw EvalError("negation applied to a non-boolean value");
    }
    return GlobalValue::boolean(!v.as_bool());
  };
  while (true) {
    switch (e.kind()) {
      case ExprKind::Var: {
        auto it = env.find(e.var_name());
        if (it == env.end()) {
          throw EvalError("unbound variable '" + e.var_name().str() + "'");
        }
        return finish(GlobalValue::real(it->second));
      }
      case ExprKind::Const:
        return finish(GlobalValue::real(e.const_value()));
      case ExprKind::Add:
        return finish(GlobalValue::real(interpret_ref(e.lhs(), env, defs, b).as_real() +
                                        interpret_ref(e.rhs(), env, defs, b).as_real()));
      case ExprKind::Sub:
        return finish(GlobalValue::real(interpret_ref(e.lhs(), env, defs, b).as_real() -
                                        interpret_ref(e.rhs(), env, defs, b).as_real()));
      case ExprKind::Mul:
        return finish(GlobalValue::real(interpret_ref(e.lhs(), env, defs, b).as_real() *
                                        interpret_ref(e.rhs(), env, defs, b).as_real()));
      case ExprKind::Pow:
        return finish(GlobalValue::real(
            rat_pow(interpret_ref(e.operand(), env, defs, b).as_real(), e.exponent())));
      case ExprKind::Quote: {
        const Expr& body = e.operand();
        if (body.kind() == ExprKind::NamedConst) {
          return finish(GlobalValue::syn(GlobalSyn::const_quote(body.const_name())));
        }
        return finish(GlobalValue::syn(GlobalSyn(quote_poly(body))));
      }
      case ExprKind::Eval: {
        GlobalValue v = interpret_ref(e.operand(), env, defs, b);
        const GlobalSyn& gs = v.as_syn();
        b.consume_one();
        Expr decoded = gs.is_poly() ? eval_syn(gs.poly())
                                    : Expr::named_const(gs.const_name());
        TypeTag expected = e.eval_tag();
        TypeTag actual = typecheck(decoded, defs);
        if (actual != expected) {
          throw TypeError("eval annotation is " + to_string(expected) +
                              " but the decoded expression has type " + to_string(actual),
                          print_expr(decoded));
        }
        e = std::move(decoded);  // continue in the same environment
        continue;
      }
      case ExprKind::NamedConst:
        e = defs.body_of(e.const_name());
        continue;
      case ExprKind::OpdApply: {
        GlobalValue va = interpret_ref(e.lhs(), env, defs, b);
        GlobalValue vb = interpret_ref(e.rhs(), env, defs, b);
        if (!va.as_syn().is_poly() || !vb.as_syn().is_poly()) {
          throw EvalError("opd operands must be polynomial syntax values");
        }
        if (!is_var_node(vb.as_syn().poly())) {
          throw EvalError("opd: second operand must be a var node");
        }
        return finish(
            GlobalValue::syn(GlobalSyn(opd_apply(va.as_syn().poly(), vb.as_syn().poly()))));
      }
      case ExprKind::Not:
        negate = !negate;
        e = e.operand();
        continue;
      case ExprKind::SynEq: {
        GlobalValue va = interpret_ref(e.lhs(), env, defs, b);
        GlobalValue vb = interpret_ref(e.rhs(), env, defs, b);
        return finish(GlobalValue::boolean(va.as_syn() == vb.as_syn()));
      }
      case ExprKind::Deriv:
        throw EvalError("derivative markers cannot be interpreted");
    }
  }
}

Expr resolve_constants(const Expr& e, const DefTable& defs) {
  switch (e.kind()) {
    case ExprKind::Var:
      if (defs.contains(e.var_name().str())) {
        return Expr::named_const(e.var_name().str());
      }
      return e;
    case ExprKind::Const:
    case ExprKind::NamedConst:
      return e;
    case ExprKind::Add:
      return Expr::add(resolve_constants(e.lhs(), defs), resolve_constants(e.rhs(), defs));
    case ExprKind::Sub:
      return Expr::sub(resolve_constants(e.lhs(), defs), resolve_constants(e.rhs(), defs));
    case ExprKind::Mul:
      return Expr::mul(resolve_constants(e.lhs(), defs), resolve_constants(e.rhs(), defs));
    case ExprKind::Pow:
      return Expr::pow(resolve_constants(e.operand(), defs), e.exponent());
    case ExprKind::Quote:
      return Expr::quote(resolve_constants(e.operand(), defs));
    case ExprKind::Eval:
      return Expr::eval(resolve_constants(e.operand(), defs), e.eval_tag());
    case ExprKind::OpdApply:
      return Expr::opd_apply(resolve_constants(e.lhs(), defs),
                             resolve_constants(e.rhs(), defs));
    case ExprKind::Not:
      return Expr::logical_not(resolve_constants(e.operand(), defs));
    case ExprKind::SynEq:
      return Expr::syn_eq(resolve_constants(e.lhs(), defs), resolve_constants(e.rhs(), defs));
    case ExprKind::Deriv:
      return e;
  }
  throw std::logic_error("resolve_constants: unreachable");
}

// --- demos ---------------------------------------------------------------

LiarReport demo_liar(std::uint64_t budget) {
  DefTable defs;
  Expr liar_body =
      Expr::logical_not(Expr::eval(Expr::quote(Expr::named_const("LIAR")), TypeTag::Bool));
  defs.define("LIAR", TypeTag::Bool, liar_body);
  Expr control_body =
      Expr::eval(Expr::quote(Expr::add(Expr::var("x"), Expr::constant(3L))), TypeTag::Real);
  defs.define("C", TypeTag::Real, control_body);

  LiarReport report;
  report.budget = budget;
  report.liar_definition = "LIAR : bool := " + print_expr(liar_body);
  report.control_definition = "C : real := " + print_expr(control_body);

  Budget liar_budget(budget);
  try {
    interpret(Expr::named_const("LIAR"), {}, defs, liar_budget);
    report.exhausted = false;  // unreachable: the regress never produces a value
  } catch (const BudgetExhausted& ex) {
    report.exhausted = true;
    report.depth = ex.depth();
  }

  Budget control_budget(budget);
  Assignment env{{VarName("x"), Rational(1)}};
  report.control_value = interpret(Expr::named_const("C"), env, defs, control_budget).as_real();
  return report;
}

std::string LiarReport::to_text() const {
  std::string s;
  s += "demo: liar\n";
  s += "liar: " + liar_definition + "\n";
  s += "budget: " + std::to_string(budget) + "\n";
  s += std::string("outcome: ") +
       (exhausted ? "BudgetExhausted at depth " + std::to_string(depth)
                  : "evaluated (unexpected)") +
       "\n";
  s += "control: " + control_definition + " at {x = 1} evaluates to " +
       rat_to_string(control_value) + "\n";
  return s;
}

std::string LiarReport::to_json_line() const {
  nlohmann::json j;
  j["demo"] = "liar";
  j["budget"] = budget;
  j["depth"] = depth;
  j["verdict"] = exhausted ? "budget-exhausted" : "evaluated";
  j["control"] = rat_to_string(control_value);
  return j.dump();
}

VariableProblemReport demo_variable_problem() {
  VariableProblemReport report;
  Expr quoted = Expr::quote(Expr::add(Expr::var("x"), Expr::constant(3L)));
  report.quote_free_vars = free_vars(quoted);

  DefTable defs;
  Expr use = Expr::eval(quoted, TypeTag::Real);
  Budget b2(16);
  report.value_at_2 =
      interpret(use, {{VarName("x"), Rational(2)}}, defs, b2).as_real();
  Budget b7(16);
  report.value_at_7 =
      interpret(use, {{VarName("x"), Rational(7)}}, defs, b7).as_real();
  report.explanation =
      "x is not free in quote(x + 3), yet the value of eval(quote(x + 3) : real) "
      "tracks the environment's x: syntactic and semantic freeness diverge once "
      "eval enters the language";
  return report;
}

std::string VariableProblemReport::to_text() const {
  std::string fv = "{";
  bool first = true;
  for (const auto& v : quote_free_vars) {
    if (!first) fv += ", ";
    fv += v.str();
    first = false;
  }
  fv += "}";
  std::string s;
  s += "demo: variable-problem\n";
  s += "free-vars(quote(x + 3)): " + fv + "\n";
  s += "eval(quote(x + 3) : real) at {x = 2}: " + rat_to_string(value_at_2) + "\n";
  s += "eval(quote(x + 3) : real) at {x = 7}: " + rat_to_string(value_at_7) + "\n";
  s += "explanation: " + explanation + "\n";
  return s;
}

std::string VariableProblemReport::to_json_line() const {
  nlohmann::json j;
  j["demo"] = "variable-problem";
  auto fv = nlohmann::json::array();
  for (const auto& v : quote_free_vars) fv.push_back(v.str());
  j["quote_free_vars"] = fv;
  j["value_at_2"] = rat_to_string(value_at_2);
  j["value_at_7"] = rat_to_string(value_at_7);
  return j.dump();
}

namespace {

// object-level membership: quote(c) == quote(c_i) for some i, decided by the
// built-in equality on syntactic values
bool quotation_among(const std::string& name, const std::vector<std::string>& enumeration,
                     const DefTable& defs) {
  for (const auto& other : enumeration) {
    Expr test = Expr::syn_eq(Expr::quote(Expr::named_const(name)),
                             Expr::quote(Expr::named_const(other)));
    Budget b(16);
    if (interpret(test, {}, defs, b).as_bool()) return true;
  }
  return false;
}

bool enumeration_property(const std::vector<std::string>& constants,
                          const std::vector<std::string>& enumeration,
                          const DefTable& defs) {
  for (const auto& c : constants) {
    if (!quotation_among(c, enumeration, defs)) return false;
  }
  return true;  // vacuously true when there are no constants
}

}  // namespace

ExtensionProblemReport demo_extension_problem(const DefTable& defs) {
  ExtensionProblemReport report;
  for (const auto& name : defs.names()) {
    report.enumeration.push_back("quote(" + name + ")");
  }
  report.holds_before = enumeration_property(defs.names(), defs.names(), defs);

  // extend by one fresh constant; the old enumeration no longer covers it
  std::string fresh;
  for (unsigned i = 1;; ++i) {
    fresh = "c" + std::to_string(i);
    if (!defs.contains(fresh)) break;
  }
  DefTable extended = defs;
  extended.define(fresh, TypeTag::Real, Expr::constant(0L));
  report.added_constant = fresh;
  report.holds_after =
      enumeration_property(extended.names(), defs.names(), extended);
  return report;
}

std::string ExtensionProblemReport::to_text() const {
  auto join = [](const std::vector<std::string>& xs) {
    if (xs.empty()) return std::string("(none)");
    std::string s;
    for (const auto& x : xs) {
      if (!s.empty()) s += ", ";
      s += x;
    }
    return s;
  };
  std::string s;
  s += "demo: extension-problem\n";
  s += "enumeration: " + join(enumeration) + "\n";
  s += std::string("property before extension: ") + (holds_before ? "holds" : "fails") + "\n";
  s += "added constant: " + added_constant + "\n";
  s += std::string("property after extension: ") + (holds_after ? "holds" : "fails") + "\n";
  s += std::string("summary: ") +
       (holds_before && !holds_after ? "holds before extension; fails after"
                                     : "unexpected verdict pattern") +
       "\n";
  return s;
}

std::string ExtensionProblemReport::to_json_line() const {
  nlohmann::json j;
  j["demo"] = "extension-problem";
  j["enumeration"] = enumeration;
  j["holds_before"] = holds_before;
  j["added_constant"] = added_constant;
  j["holds_after"] = holds_after;
  return j.dump();
}

}  // namespace polysyn
