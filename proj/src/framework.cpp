#include "polysyn/framework.hpp"

#include "polysyn/parser.hpp"
#include "polysyn/polydiff.hpp"

#include <json.hpp>

#include <stdexcept>

namespace polysyn {

std::string CheckReport::to_text() const {
  std::string s;
  s += "check: " + check + "\n";
  s += "checked: " + std::to_string(checked) + "\n";
  s += "skipped: " + std::to_string(skipped) + "\n";
  s += "failures: " + std::to_string(failures.size()) + "\n";
  std::size_t shown = 0;
  for (const auto& cex : failures) {
    if (shown++ == kMaxPrintedCounterexamples) break;
    s += "counterexample: input=" + cex.input + " expected=" + cex.expected +
         " actual=" + cex.actual + "\n";
  }
  if (!notes.empty()) s += "note: " + notes + "\n";
  s += std::string("verdict: ") + (pass() ? "pass" : "fail") + "\n";
  return s;
}

std::string CheckReport::to_json_line() const {
  nlohmann::json j;
  j["check"] = check;
  j["checked"] = checked;
  j["skipped"] = skipped;
  j["failures"] = failures.size();
  auto cexs = nlohmann::json::array();
  std::size_t shown = 0;
  for (const auto& cex : failures) {
    if (shown++ == kMaxPrintedCounterexamples) break;
    cexs.push_back({{"input", cex.input}, {"expected", cex.expected}, {"actual", cex.actual}});
  }
  j["counterexamples"] = cexs;
  if (!notes.empty()) j["note"] = notes;
  j["verdict"] = pass() ? "pass" : "fail";
  return j.dump();
}

FrameworkInstance local_instance() {
  FrameworkInstance f;
  f.name = "local";
  f.obj_lang_gen = [](SplitMix64& rng) { return gen_poly_expr(rng); };
  f.obj_lang_member = [](const Expr& e) { return is_polynomial(e); };
  f.syn_decode = [](const SynValue& s) { return eval_syn(s); };
  f.quote_fn = [](const Expr& e) { return quote_poly(e); };
  f.eval_fn = [](const SynValue& s) { return std::optional<Expr>(eval_syn(s)); };
  f.sem_value = [](const Expr& e) { return to_nf(e); };
  return f;
}

FrameworkInstance global_instance() {
  FrameworkInstance f = local_instance();
  f.name = "global";
  f.notes =
      "global approach: the sampled domain excludes the liar witness, where "
      "disquotation under built-in eval fails (run `demo liar`); the law is "
      "not universally valid";
  return f;
}

namespace {

struct SampleOutcome {
  enum class Status { Ok, Skipped, Failed };
  Status status = Status::Ok;
  Counterexample cex;
};

CheckReport run_indexed(std::string check_name, std::uint64_t n, std::uint64_t seed,
                        RunMode mode,
                        const std::function<SampleOutcome(SplitMix64&)>& one,
                        std::string notes) {
  if (n < 1) throw std::invalid_argument(check_name + ": sample count must be >= 1");

  std::vector<SampleOutcome> slots(n);
  auto run_one = [&](std::uint64_t i) {
    SplitMix64 rng = substream(seed, i);
    try {
      slots[i] = one(rng);
    } catch (const std::exception& ex) {
      slots[i] = {SampleOutcome::Status::Failed,
                  {"sample " + std::to_string(i), "no exception", ex.what()}};
    }
  };

  if (mode == RunMode::Parallel) {
    // dynamic scheduling: sample costs vary wildly; slot indexing keeps the
    // report independent of which worker ran what
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      run_one(static_cast<std::uint64_t>(i));
    }
  } else {
    for (std::uint64_t i = 0; i < n; ++i) run_one(i);
  }

  CheckReport report;
  report.check = std::move(check_name);
  report.checked = n;
  report.notes = std::move(notes);
  for (const auto& slot : slots) {
    switch (slot.status) {
      case SampleOutcome::Status::Ok: break;
      case SampleOutcome::Status::Skipped: ++report.skipped; break;
      case SampleOutcome::Status::Failed: report.failures.push_back(slot.cex); break;
    }
  }
  return report;
}

}  // namespace

CheckReport check_quotation_axiom(const FrameworkInstance& f, std::uint64_t n,
                                  std::uint64_t seed, RunMode mode) {
  return run_indexed(
      "quotation-axiom", n, seed, mode,
      [&f](SplitMix64& rng) -> SampleOutcome {
        Expr e = f.obj_lang_gen(rng);
        if (!f.obj_lang_member(e)) {
          return {SampleOutcome::Status::Failed,
                  {print_expr(e), "a member of the object language", "outside it"}};
        }
        Expr decoded = f.syn_decode(f.quote_fn(e));
        if (decoded == e) return {};
        return {SampleOutcome::Status::Failed,
                {print_expr(e), print_expr(e), print_expr(decoded)}};
      },
      f.notes);
}

CheckReport check_evaluation_axiom(const FrameworkInstance& f, std::uint64_t n,
                                   std::uint64_t seed, RunMode mode) {
  return run_indexed(
      "evaluation-axiom", n, seed, mode,
      [&f](SplitMix64& rng) -> SampleOutcome {
        SynValue s = gen_synvalue(rng);
        std::optional<Expr> evaluated = f.eval_fn(s);
        if (!evaluated) return {SampleOutcome::Status::Skipped, {}};
        if (!f.obj_lang_member(*evaluated)) {
          return {SampleOutcome::Status::Failed,
                  {print_synvalue(s), "an object-language expression",
                   print_expr(*evaluated)}};
        }
        Expr decoded = f.syn_decode(s);
        if (nf_equal(f.sem_value(*evaluated), f.sem_value(decoded))) return {};
        return {SampleOutcome::Status::Failed,
                {print_synvalue(s), print_expr(decoded), print_expr(*evaluated)}};
      },
      f.notes);
}

CheckReport check_disquotation(const FrameworkInstance& f, std::uint64_t n,
                               std::uint64_t seed, RunMode mode) {
  return run_indexed(
      "disquotation", n, seed, mode,
      [&f](SplitMix64& rng) -> SampleOutcome {
        Expr u = f.obj_lang_gen(rng);
        std::optional<Expr> back = f.eval_fn(f.quote_fn(u));
        if (back && *back == u) return {};
        return {SampleOutcome::Status::Failed,
                {print_expr(u), print_expr(u), back ? print_expr(*back) : "undefined"}};
      },
      f.notes);
}

CheckReport check_comp_behavior(std::uint64_t n, std::uint64_t seed, RunMode mode) {
  return run_indexed(
      "comp-behavior", n, seed, mode,
      [](SplitMix64& rng) -> SampleOutcome {
        Expr u = gen_poly_expr(rng);
        VarName x = gen_variable(rng);
        Expr via_opd = eval_syn(opd_apply(quote_poly(u), quote_poly(Expr::var(x))));
        Expr via_polydiff = poly_diff(u, x).result;
        if (via_opd == via_polydiff) return {};
        return {SampleOutcome::Status::Failed,
                {"d/d" + x.str() + "(" + print_expr(u) + ")", print_expr(via_polydiff),
                 print_expr(via_opd)}};
      },
      "");
}

CheckReport check_math_meaning(std::uint64_t n, std::uint64_t seed, RunMode mode) {
  return run_indexed(
      "math-meaning", n, seed, mode,
      [](SplitMix64& rng) -> SampleOutcome {
        Expr u = gen_poly_expr(rng);
        VarName x = gen_variable(rng);
        Expr symbolic = eval_syn(opd_apply(quote_poly(u), quote_poly(Expr::var(x))));
        PolyNF lhs = to_nf(symbolic);
        PolyNF rhs = limit_derivative(u, x);
        if (nf_equal(lhs, rhs)) return {};
        return {SampleOutcome::Status::Failed,
                {"d/d" + x.str() + "(" + print_expr(u) + ")", print_expr(nf_to_expr(rhs)),
                 print_expr(symbolic)}};
      },
      "a pass here together with comp-behavior certifies that the operator's "
      "results denote true derivatives: the symbolic route equals the "
      "limit-definition route exactly");
}

}  // namespace polysyn
