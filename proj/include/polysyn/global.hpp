#pragma once

#include "polysyn/expr.hpp"
#include "polysyn/semantics.hpp"
#include "polysyn/synvalue.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace polysyn {

class TypeError : public std::runtime_error {
 public:
  TypeError(const std::string& msg, std::string offending)
      : std::runtime_error(msg + " in '" + offending + "'"),
        offending_(std::move(offending)) {}
  const std::string& offending() const { return offending_; }

 private:
  std::string offending_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when eval unfolding exhausts its budget: the runtime face of the
// Evaluation Problem. depth() is the number of unfoldings completed.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::uint64_t depth)
      : std::runtime_error("evaluation budget exhausted at depth " + std::to_string(depth)),
        depth_(depth) {}
  std::uint64_t depth() const { return depth_; }

 private:
  std::uint64_t depth_;
};

// Counts eval-node unfoldings; one unit per unfolding, never negative.
class Budget {
 public:
  explicit Budget(std::uint64_t units = 10'000) : remaining_(units) {}
  std::uint64_t remaining() const { return remaining_; }
  std::uint64_t consumed() const { return consumed_; }

  void consume_one() {
    if (remaining_ == 0) throw BudgetExhausted(consumed_);
    --remaining_;
    ++consumed_;
  }

 private:
  std::uint64_t remaining_;
  std::uint64_t consumed_ = 0;
};

// Syntactic value of the global mode: a polynomial syntax tree, or the
// quotation of a named constant (the members of L_con). The local SynValue
// stays closed over the polynomial constructors; this is the enlargement the
// liar and extension demos need.
class GlobalSyn {
 public:
  GlobalSyn(SynValue s) : rep_(std::move(s)) {}  // NOLINT: implicit by design
  static GlobalSyn const_quote(std::string name) { return GlobalSyn(Tag{}, std::move(name)); }

  bool is_poly() const { return std::holds_alternative<SynValue>(rep_); }
  const SynValue& poly() const { return std::get<SynValue>(rep_); }
  const std::string& const_name() const { return std::get<std::string>(rep_); }

  friend bool operator==(const GlobalSyn& a, const GlobalSyn& b) { return a.rep_ == b.rep_; }

  std::string to_string() const;

 private:
  struct Tag {};
  GlobalSyn(Tag, std::string name) : rep_(std::move(name)) {}
  std::variant<SynValue, std::string> rep_;
};

// Result of interpretation; the alternative always matches the TypeTag the
// expression checked at.
class GlobalValue {
 public:
  static GlobalValue real(Rational r) { return GlobalValue(std::move(r)); }
  static GlobalValue syn(GlobalSyn s) { return GlobalValue(std::move(s)); }
  static GlobalValue boolean(bool b) { return GlobalValue(b); }

  TypeTag tag() const;
  const Rational& as_real() const { return std::get<Rational>(rep_); }
  const GlobalSyn& as_syn() const { return std::get<GlobalSyn>(rep_); }
  bool as_bool() const { return std::get<bool>(rep_); }

  friend bool operator==(const GlobalValue& a, const GlobalValue& b) {
    return a.rep_ == b.rep_;
  }

  std::string to_string() const;

 private:
  explicit GlobalValue(Rational r) : rep_(std::move(r)) {}
  explicit GlobalValue(GlobalSyn s) : rep_(std::move(s)) {}
  explicit GlobalValue(bool b) : rep_(b) {}
  std::variant<Rational, GlobalSyn, bool> rep_;
};

// Ordered definition table for named constants. A body may reference earlier
// constants; the constant being defined may be referenced only underneath a
// Quote node (the liar pattern), so unfolding alone can never diverge —
// divergence needs eval and is caught by the budget.
class DefTable {
 public:
  void define(const std::string& name, TypeTag type, Expr body);
  bool contains(const std::string& name) const;
  TypeTag type_of(const std::string& name) const;
  const Expr& body_of(const std::string& name) const;
  const std::vector<std::string>& names() const { return order_; }

 private:
  struct Entry {
    TypeTag type;
    Expr body;
  };
  std::map<std::string, Entry> entries_;
  std::vector<std::string> order_;
};

// Var/Const/arithmetic type as Real; Quote takes a polynomial body or a
// single named-constant leaf and yields Syn; Eval(e, t) needs e : Syn and
// yields t; opd takes Syn twice to Syn; not is Bool to Bool; syneq compares
// two Syn operands to Bool. Throws TypeError with the offending subterm.
TypeTag typecheck(const Expr& e, const DefTable& defs);

// Exact interpreter. Each Eval unfolding consumes one budget unit and
// re-checks that the decoded expression has the annotated type.
GlobalValue interpret(Expr e, const Assignment& env, const DefTable& defs, Budget& b);

// Reclassifies Var leaves whose names are defined constants as NamedConst
// (bare identifiers parse as variables; the table decides what they are).
Expr resolve_constants(const Expr& e, const DefTable& defs);

// --- demos ---------------------------------------------------------------

struct LiarReport {
  std::uint64_t budget = 0;
  std::uint64_t depth = 0;  // unfoldings completed when the budget ran out
  bool exhausted = false;
  std::string liar_definition;
  std::string control_definition;
  Rational control_value;
  std::string to_text() const;
  std::string to_json_line() const;
};

// Installs LIAR : bool := not(eval(quote(LIAR) : bool)) and interprets it;
// the regress consumes exactly one unit per unfolding until the budget is
// exhausted. The control constant C := eval(quote(x + 3) : real) at {x = 1}
// evaluates normally.
LiarReport demo_liar(std::uint64_t budget = 10'000);

struct VariableProblemReport {
  std::set<VarName> quote_free_vars;  // empty: x is not free in quote(x + 3)
  Rational value_at_2;
  Rational value_at_7;
  std::string explanation;
  std::string to_text() const;
  std::string to_json_line() const;
};

VariableProblemReport demo_variable_problem();

struct ExtensionProblemReport {
  std::vector<std::string> enumeration;  // quotations of the table's constants
  bool holds_before = false;
  std::string added_constant;
  bool holds_after = false;
  std::string to_text() const;
  std::string to_json_line() const;
};

// The finite enumeration property "every constant's quotation is among
// {quote(c1), ..., quote(cn)}" holds for defs and flips to failing once one
// fresh constant is added: object-level quotation breaks conservativity.
ExtensionProblemReport demo_extension_problem(const DefTable& defs);

}  // namespace polysyn
