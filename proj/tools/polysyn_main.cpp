#include "polysyn/framework.hpp"
#include "polysyn/global.hpp"
#include "polysyn/parser.hpp"
#include "polysyn/polydiff.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace polysyn;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string expr_text;
  std::string var;
  bool trace = false;
  std::string synvalue_text;
  std::string target;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 0;
  bool serial = false;
  std::uint64_t budget = 10'000;
};

bool structured(const Options& opt) { return opt.format == "structured"; }

int cmd_diff(const Options& opt) {
  Expr e = parse_expr(opt.expr_text);
  if (!is_polynomial(e)) {
    std::cerr << "error: input is not a polynomial\n";
    return kExitUsage;
  }
  DiffResult r = poly_diff(e, VarName(opt.var));
  if (structured(opt)) {
    nlohmann::json j;
    j["command"] = "diff";
    j["result"] = print_expr(r.result);
    if (opt.trace) {
      auto steps = nlohmann::json::array();
      for (const auto& step : r.trace) {
        steps.push_back({{"rule", to_string(step.rule)},
                         {"before", print_expr(step.before)},
                         {"after", print_expr(step.after)}});
      }
      j["trace"] = steps;
    }
    std::cout << j.dump() << "\n";
  } else {
    if (opt.trace) {
      for (const auto& step : r.trace) {
        std::cout << to_string(step.rule) << ": " << print_expr(step.before) << " ⟶ "
                  << print_expr(step.after) << "\n";
      }
    }
    std::cout << print_expr(r.result) << "\n";
  }
  return kExitOk;
}

int cmd_quote(const Options& opt) {
  Expr e = parse_expr(opt.expr_text);
  if (!is_polynomial(e)) {
    std::cerr << "error: input is not a polynomial\n";
    return kExitUsage;
  }
  std::string printed = print_synvalue(quote_poly(e));
  if (structured(opt)) {
    std::cout << nlohmann::json{{"command", "quote"}, {"result", printed}}.dump() << "\n";
  } else {
    std::cout << printed << "\n";
  }
  return kExitOk;
}

int cmd_eval_syn(const Options& opt) {
  SynValue s = parse_synvalue(opt.synvalue_text);
  std::string printed = print_expr(eval_syn(s));
  if (structured(opt)) {
    std::cout << nlohmann::json{{"command", "eval-syn"}, {"result", printed}}.dump() << "\n";
  } else {
    std::cout << printed << "\n";
  }
  return kExitOk;
}

int cmd_check(const Options& opt) {
  RunMode mode = opt.serial ? RunMode::Serial : RunMode::Parallel;
  FrameworkInstance local = local_instance();

  std::vector<CheckReport> reports;
  auto want = [&](const std::string& name) {
    return opt.target == "all" || opt.target == name;
  };
  if (want("quotation-axiom")) {
    reports.push_back(check_quotation_axiom(local, opt.samples, opt.seed, mode));
  }
  if (want("evaluation-axiom")) {
    reports.push_back(check_evaluation_axiom(local, opt.samples, opt.seed, mode));
  }
  if (want("disquotation")) {
    reports.push_back(check_disquotation(local, opt.samples, opt.seed, mode));
  }
  if (want("comp-behavior")) {
    reports.push_back(check_comp_behavior(opt.samples, opt.seed, mode));
  }
  if (want("math-meaning")) {
    reports.push_back(check_math_meaning(opt.samples, opt.seed, mode));
  }

  bool all_pass = true;
  bool first = true;
  for (const auto& report : reports) {
    if (structured(opt)) {
      std::cout << report.to_json_line() << "\n";
    } else {
      if (!first) std::cout << "\n";
      std::cout << report.to_text();
    }
    first = false;
    all_pass = all_pass && report.pass();
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_demo(const Options& opt) {
  if (opt.target == "liar") {
    LiarReport r = demo_liar(opt.budget);
    std::cout << (structured(opt) ? r.to_json_line() + "\n" : r.to_text());
    return kExitOk;
  }
  if (opt.target == "variable-problem") {
    VariableProblemReport r = demo_variable_problem();
    std::cout << (structured(opt) ? r.to_json_line() + "\n" : r.to_text());
    return kExitOk;
  }
  // extension-problem over a small table whose bodies use earlier constants
  DefTable defs;
  defs.define("c1", TypeTag::Real, Expr::constant(2L));
  defs.define("c2", TypeTag::Real,
              Expr::add(Expr::named_const("c1"), Expr::constant(1L)));
  ExtensionProblemReport r = demo_extension_problem(defs);
  std::cout << (structured(opt) ? r.to_json_line() + "\n" : r.to_text());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"syntax-framework toolkit: verified polynomial differentiation with "
               "executable quotation and evaluation"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* diff = app.add_subcommand("diff", "differentiate a polynomial");
  diff->add_option("expr", opt.expr_text, "polynomial expression")->required();
  diff->add_option("--var", opt.var, "differentiation variable")->required();
  diff->add_flag("--trace", opt.trace, "print every rewrite step");
  add_format(diff);

  CLI::App* quote = app.add_subcommand("quote", "print the syntactic value of a polynomial");
  quote->add_option("expr", opt.expr_text, "polynomial expression")->required();
  add_format(quote);

  CLI::App* evalsyn = app.add_subcommand("eval-syn", "decode a syntactic value");
  evalsyn->add_option("synvalue", opt.synvalue_text, "constructor form")->required();
  add_format(evalsyn);

  CLI::App* check = app.add_subcommand("check", "run the framework checkers");
  check
      ->add_option("which", opt.target, "checker to run")
      ->required()
      ->check(CLI::IsMember({"quotation-axiom", "evaluation-axiom", "disquotation",
                             "comp-behavior", "math-meaning", "all"}));
  check->add_option("--samples", opt.samples, "sample count");
  check->add_option("--seed", opt.seed, "generator seed");
  check->add_flag("--serial", opt.serial, "single-threaded reference lane");
  add_format(check);

  CLI::App* demo = app.add_subcommand("demo", "run a global-approach demonstration");
  demo->add_option("which", opt.target, "demonstration to run")
      ->required()
      ->check(CLI::IsMember({"liar", "variable-problem", "extension-problem"}));
  demo->add_option("--budget", opt.budget, "eval-unfolding budget");
  add_format(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (diff->parsed()) return cmd_diff(opt);
    if (quote->parsed()) return cmd_quote(opt);
    if (evalsyn->parsed()) return cmd_eval_syn(opt);
    if (check->parsed()) return cmd_check(opt);
    if (demo->parsed()) return cmd_demo(opt);
  } catch (const polysyn::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
