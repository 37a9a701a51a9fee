// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Criteria that specify the
// command-line surface run the real CLI binary.

#include "polysyn/framework.hpp"
#include "polysyn/global.hpp"
#include "polysyn/parser.hpp"
#include "polysyn/polydiff.hpp"
#include "polysyn/semantics.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifndef POLYSYN_CLI_PATH
#error "POLYSYN_CLI_PATH must point at the CLI binary"
#endif

namespace {

using namespace polysyn;

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  std::string cmd = std::string(POLYSYN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  CommandResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int failures = 0;

void criterion(int number, const std::string& label, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && elapsed >= limit_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("exceeded ") +
              std::to_string(limit_seconds) + "s";
  }
  if (!ok) ++failures;
  char line[512];
  std::snprintf(line, sizeof line, "%s  criterion %2d: %s (%.2fs)%s%s",
                ok ? "PASS" : "FAIL", number, label.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
  std::cout << line << "\n";
}

void extra(const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& ex) {
    detail = std::string("exception: ") + ex.what();
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << label
            << (detail.empty() ? "" : " -- " + detail) << "\n";
}

SynValue swap_plus(const SynValue& s) {
  switch (s.kind()) {
    case SynKind::Con:
    case SynKind::Var:
      return s;
    case SynKind::Plus:
      return SynValue::plus(swap_plus(s.rhs()), swap_plus(s.lhs()));
    case SynKind::Minus:
      return SynValue::minus(swap_plus(s.lhs()), swap_plus(s.rhs()));
    case SynKind::Times:
      return SynValue::times(swap_plus(s.lhs()), swap_plus(s.rhs()));
    case SynKind::Power:
      return SynValue::power(swap_plus(s.base()), s.exponent());
  }
  throw std::logic_error("unreachable");
}

}  // namespace

int main() {
  const VarName x("x");

  criterion(1, "worked example: diff \"x*(x^2+y)\" --var x", 1.0, [&](std::string& why) {
    CommandResult r = run_cli("diff \"x*(x^2+y)\" --var x");
    if (r.exit_code != 0) {
      why = "exit " + std::to_string(r.exit_code);
      return false;
    }
    std::string printed = r.output.substr(0, r.output.find('\n'));
    if (!nf_equal(to_nf(parse_expr(printed)), to_nf(parse_expr("3*x^2 + y")))) {
      why = "result '" + printed + "' is not 3*x^2 + y";
      return false;
    }
    DiffResult d = poly_diff(parse_expr("x*(x^2+y)"), x);
    if (d.trace.empty() || d.trace[0].rule != RuleName::ProductRule) {
      why = "first step is not ProductRule";
      return false;
    }
    std::map<RuleName, int> counts;
    for (const auto& step : d.trace) {
      if (step.rule != RuleName::SimplifyZeroAdd && step.rule != RuleName::SimplifyOneMul &&
          step.rule != RuleName::CollectLikeTerms) {
        ++counts[step.rule];
      }
    }
    std::map<RuleName, int> expected{{RuleName::ProductRule, 1},
                                     {RuleName::VariableRule, 2},
                                     {RuleName::SumDiffRule, 1},
                                     {RuleName::PowerRulePos, 1},
                                     {RuleName::ConstantRule, 1}};
    if (counts != expected) {
      why = "differentiation-rule multiset mismatch";
      return false;
    }
    CommandResult t = run_cli("diff \"x*(x^2+y)\" --var x --trace");
    if (t.output.find("ProductRule:") != 0) {
      why = "--trace does not start with ProductRule";
      return false;
    }
    return true;
  });

  criterion(2, "disquotation E(Q(u)) = u on 1000 seeded polynomials", 5.0,
            [&](std::string& why) {
              CheckReport r = check_disquotation(local_instance(), 1000, 0);
              why = std::to_string(r.failures.size()) + " failures";
              return r.pass() && r.checked == 1000;
            });

  criterion(3, "quotation/evaluation axioms pass; documented mutants fail", 10.0,
            [&](std::string& why) {
              FrameworkInstance local = local_instance();
              if (!check_quotation_axiom(local, 1000, 0).pass()) {
                why = "quotation axiom failed on the real instance";
                return false;
              }
              if (!check_evaluation_axiom(local, 1000, 0).pass()) {
                why = "evaluation axiom failed on the real instance";
                return false;
              }
              FrameworkInstance qm = local_instance();
              qm.quote_fn = [](const Expr& e) { return swap_plus(quote_poly(e)); };
              if (check_quotation_axiom(qm, 1000, 0).pass()) {
                why = "swapped-plus quotation mutant was not detected";
                return false;
              }
              FrameworkInstance em = local_instance();
              em.eval_fn = [](const SynValue&) {
                return std::optional<Expr>(Expr::constant(0L));
              };
              if (check_evaluation_axiom(em, 1000, 0).pass()) {
                why = "constant-zero evaluation mutant was not detected";
                return false;
              }
              return true;
            });

  criterion(4, "CompBehavior on 1000 seeded samples", 0, [&](std::string& why) {
    CheckReport r = check_comp_behavior(1000, 0);
    why = std::to_string(r.failures.size()) + " failures";
    return r.pass() && r.checked == 1000;
  });

  criterion(5, "MathMeaning vs the limit-definition oracle on 1000 samples", 0,
            [&](std::string& why) {
              CheckReport r = check_math_meaning(1000, 0);
              why = std::to_string(r.failures.size()) + " failures";
              return r.pass() && r.checked == 1000;
            });

  criterion(6, "oracle independence: limit derivative vs term-by-term on 1000 samples", 0,
            [&](std::string& why) {
              for (std::uint64_t i = 0; i < 1000; ++i) {
                SplitMix64 rng = substream(0, i);
                Expr u = gen_poly_expr(rng);
                VarName v = gen_variable(rng);
                if (!nf_equal(limit_derivative(u, v), nf_derivative(to_nf(u), v))) {
                  why = "disagreement on sample " + std::to_string(i);
                  return false;
                }
              }
              return true;
            });

  criterion(7, "liar regress exhausts budgets 1, 100, 10000 exactly", 0,
            [&](std::string& why) {
              for (std::uint64_t b : {1ULL, 100ULL, 10000ULL}) {
                LiarReport r = demo_liar(b);
                if (!r.exhausted || r.depth != b) {
                  why = "budget " + std::to_string(b) + " reached depth " +
                        std::to_string(r.depth);
                  return false;
                }
                if (r.control_value != Rational(4)) {
                  why = "control constant did not evaluate to 4";
                  return false;
                }
              }
              return true;
            });

  criterion(8, "variable problem: closed quotation, values 5 and 10", 0,
            [&](std::string& why) {
              VariableProblemReport r = demo_variable_problem();
              why = rat_to_string(r.value_at_2) + " and " + rat_to_string(r.value_at_7);
              return r.quote_free_vars.empty() && r.value_at_2 == Rational(5) &&
                     r.value_at_7 == Rational(10);
            });

  criterion(9, "extension problem: enumeration property flips on one new constant", 0,
            [&](std::string& why) {
              DefTable defs;
              defs.define("c1", TypeTag::Real, Expr::constant(2L));
              ExtensionProblemReport r = demo_extension_problem(defs);
              why = std::string("before=") + (r.holds_before ? "holds" : "fails") +
                    " after=" + (r.holds_after ? "holds" : "fails");
              return r.holds_before && !r.holds_after;
            });

  criterion(10, "determinism: check all --samples 1000 --seed 0 is byte-identical", 0,
            [&](std::string& why) {
              CommandResult a = run_cli("check all --samples 1000 --seed 0");
              CommandResult b = run_cli("check all --samples 1000 --seed 0");
              if (a.exit_code != 0 || b.exit_code != 0) {
                why = "nonzero exit";
                return false;
              }
              if (a.output != b.output) {
                why = "outputs differ";
                return false;
              }
              CommandResult c = run_cli("check all --samples 1000 --seed 0 --serial");
              if (a.output != c.output) {
                why = "serial lane differs";
                return false;
              }
              return true;
            });

  // exit-code contract of the CLI (0 success, 1 check failure, 2 usage/parse)
  extra("cli-contract: parse error exits 2 with a span diagnostic", [&](std::string& why) {
    CommandResult r = run_cli("diff \"x*(\" --var x");
    why = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 2 && r.output.find("offset 3") != std::string::npos;
  });
  extra("cli-contract: non-polynomial input exits 2", [&](std::string& why) {
    CommandResult r = run_cli("quote \"quote(x)\"");
    why = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 2;
  });
  extra("cli-contract: samples 0 exits 2", [&](std::string& why) {
    CommandResult r = run_cli("check comp-behavior --samples 0");
    why = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 2;
  });
  extra("cli-contract: single-sample check reports 1/1", [&](std::string& why) {
    CommandResult r = run_cli("check math-meaning --samples 1 --seed 0");
    why = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 0 && r.output.find("checked: 1\n") != std::string::npos &&
           r.output.find("verdict: pass") != std::string::npos;
  });
  extra("cli-contract: quote and eval-syn invert each other", [&](std::string& why) {
    CommandResult q = run_cli("quote \"x+3\"");
    if (q.output != "plus(var(s_x),con(s_3))\n") {
      why = "quote printed: " + q.output;
      return false;
    }
    CommandResult e = run_cli("eval-syn \"plus(var(s_x),con(s_3))\"");
    if (e.output != "x + 3\n") {
      why = "eval-syn printed: " + e.output;
      return false;
    }
    return true;
  });
  extra("cli-contract: demo liar --budget 100 reports the depth", [&](std::string& why) {
    CommandResult r = run_cli("demo liar --budget 100");
    why = "exit " + std::to_string(r.exit_code);
    return r.exit_code == 0 &&
           r.output.find("BudgetExhausted at depth 100") != std::string::npos;
  });

  if (failures == 0) {
    std::cout << "all acceptance criteria pass\n";
    return 0;
  }
  std::cout << failures << " acceptance checks failed\n";
  return 1;
}
