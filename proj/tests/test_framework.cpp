#include "polysyn/framework.hpp"

#include "polysyn/polydiff.hpp"
#include "test_util.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace polysyn;
using namespace polysyn::test;

namespace {

// documented quotation mutant: swaps the arguments of every PlusNode
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

FrameworkInstance quote_mutant() {
  FrameworkInstance f = local_instance();
  f.name = "local/quote-mutant";
  f.quote_fn = [](const Expr& e) { return swap_plus(quote_poly(e)); };
  return f;
}

FrameworkInstance eval_mutant() {
  FrameworkInstance f = local_instance();
  f.name = "local/eval-mutant";
  f.eval_fn = [](const SynValue&) { return std::optional<Expr>(Expr::constant(0L)); };
  return f;
}

}  // namespace

TEST_CASE("all checkers pass on the local instance") {
  FrameworkInstance local = local_instance();
  CHECK(check_quotation_axiom(local, 300, 0).pass());
  CHECK(check_evaluation_axiom(local, 300, 0).pass());
  CHECK(check_disquotation(local, 300, 0).pass());
  CHECK(check_comp_behavior(300, 0).pass());
  CHECK(check_math_meaning(300, 0).pass());
}

TEST_CASE("evaluation axiom reports no skips on the local instance: E is total") {
  CheckReport r = check_evaluation_axiom(local_instance(), 300, 0);
  CHECK(r.skipped == 0);
  CHECK(r.checked == 300);
}

TEST_CASE("quotation mutant fails and the counterexample contains an addition") {
  CheckReport r = check_quotation_axiom(quote_mutant(), 1000, 0);
  CHECK_FALSE(r.pass());
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].input.find("+") != std::string::npos);
}

TEST_CASE("evaluation mutant fails on any value not denoting zero") {
  CheckReport r = check_evaluation_axiom(eval_mutant(), 1000, 0);
  CHECK_FALSE(r.pass());
  REQUIRE(!r.failures.empty());
  CHECK(r.failures[0].actual == "0");
}

TEST_CASE("mutants also break disquotation") {
  CHECK_FALSE(check_disquotation(quote_mutant(), 1000, 0).pass());
  CHECK_FALSE(check_disquotation(eval_mutant(), 1000, 0).pass());
}

TEST_CASE("partial evaluation functions are skipped and counted") {
  FrameworkInstance f = local_instance();
  f.eval_fn = [](const SynValue& s) -> std::optional<Expr> {
    if (node_count(s) % 2 == 1) return std::nullopt;
    return eval_syn(s);
  };
  CheckReport r = check_evaluation_axiom(f, 400, 0);
  CHECK(r.pass());
  CHECK(r.skipped > 0);
  CHECK(r.checked == 400);
}

TEST_CASE("sample count zero is a precondition violation") {
  FrameworkInstance local = local_instance();
  CHECK_THROWS_AS(check_quotation_axiom(local, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_evaluation_axiom(local, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_disquotation(local, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_comp_behavior(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(check_math_meaning(0, 0), std::invalid_argument);
}

TEST_CASE("reports are identical across lanes and runs") {
  FrameworkInstance local = local_instance();
  auto both = [&](auto&& run) {
    std::string serial = run(RunMode::Serial).to_text();
    std::string parallel = run(RunMode::Parallel).to_text();
    CHECK(serial == parallel);
    CHECK(run(RunMode::Parallel).to_text() == parallel);  // repeated run
  };
  both([&](RunMode m) { return check_quotation_axiom(local, 200, 7, m); });
  both([&](RunMode m) { return check_evaluation_axiom(local, 200, 7, m); });
  both([&](RunMode m) { return check_disquotation(local, 200, 7, m); });
  both([&](RunMode m) { return check_comp_behavior(200, 7, m); });
  both([&](RunMode m) { return check_math_meaning(200, 7, m); });
  // failure lists are deterministic too
  both([&](RunMode m) { return check_quotation_axiom(quote_mutant(), 200, 7, m); });
}

TEST_CASE("different seeds sample different populations") {
  CheckReport a = check_quotation_axiom(quote_mutant(), 50, 0);
  CheckReport b = check_quotation_axiom(quote_mutant(), 50, 1);
  REQUIRE(!a.failures.empty());
  REQUIRE(!b.failures.empty());
  CHECK(a.failures[0].input != b.failures[0].input);
}

TEST_CASE("the global instance documents the liar exclusion") {
  FrameworkInstance global = global_instance();
  CheckReport r = check_disquotation(global, 300, 0);
  CHECK(r.pass());  // the sampled population excludes the witness
  CHECK(r.notes.find("liar") != std::string::npos);
  CHECK(r.to_text().find("note: ") != std::string::npos);
}

TEST_CASE("report serialization") {
  CheckReport r = check_math_meaning(10, 0);
  std::string text = r.to_text();
  CHECK(text.find("check: math-meaning\n") == 0);
  CHECK(text.find("verdict: pass\n") != std::string::npos);

  auto j = nlohmann::json::parse(r.to_json_line());
  CHECK(j["check"] == "math-meaning");
  CHECK(j["checked"] == 10);
  CHECK(j["failures"] == 0);
  CHECK(j["verdict"] == "pass");

  CheckReport bad = check_quotation_axiom(quote_mutant(), 100, 0);
  auto jb = nlohmann::json::parse(bad.to_json_line());
  CHECK(jb["verdict"] == "fail");
  CHECK(jb["counterexamples"].size() ==
        std::min<std::size_t>(bad.failures.size(), kMaxPrintedCounterexamples));
}
