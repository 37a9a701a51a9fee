#pragma once

#include "polysyn/expr.hpp"
#include "polysyn/generator.hpp"
#include "polysyn/semantics.hpp"
#include "polysyn/synvalue.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace polysyn {

// A syntax framework instance (D_syn, V_syn, L_syn, Q, E) made executable:
// the pieces a checker needs, as plain functions so tests can install
// mutants. The semantic valuation is the exact-rational standard model
// restricted to polynomials.
struct FrameworkInstance {
  std::string name;
  std::function<Expr(SplitMix64&)> obj_lang_gen;          // sampler for L_obj
  std::function<bool(const Expr&)> obj_lang_member;
  std::function<Expr(const SynValue&)> syn_decode;        // V_syn^-1
  std::function<SynValue(const Expr&)> quote_fn;          // Q
  std::function<std::optional<Expr>(const SynValue&)> eval_fn;  // E, possibly partial
  std::function<PolyNF(const Expr&)> sem_value;           // V_sem
  std::string notes;
};

struct Counterexample {
  std::string input;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // samples where E was undefined
  std::vector<Counterexample> failures;
  std::string notes;

  bool pass() const { return failures.empty(); }

  // Stable text block; counterexamples capped at kMaxPrintedCounterexamples.
  std::string to_text() const;
  // One-line JSON record with the same fields.
  std::string to_json_line() const;
};

inline constexpr std::size_t kMaxPrintedCounterexamples = 3;

enum class RunMode { Serial, Parallel };

// The standard local-approach instance: L_obj = L_poly, Q = quote_poly,
// E = eval_syn (total), V_sem = to_nf.
FrameworkInstance local_instance();

// Same maps; in the global approach the sampled domain excludes the liar
// witness, where disquotation under the built-in eval fails (see demo liar).
// The exclusion is recorded in `notes`.
FrameworkInstance global_instance();

// Each checker draws sample i from substream(seed, i), so the report is a
// deterministic function of (n, seed) in both run modes. n = 0 throws
// std::invalid_argument.

// Quotation Axiom, V_sem(Q(e)) = V_syn(e): under the local collapse the
// syntactic value IS its own semantic value, so the axiom is
// syn_decode(quote_fn(e)) == e.
CheckReport check_quotation_axiom(const FrameworkInstance& f, std::uint64_t n,
                                  std::uint64_t seed, RunMode mode = RunMode::Parallel);

// Evaluation Axiom, V_sem(E(s)) = V_sem(V_syn^-1(V_sem(s))): undefined E(s)
// is skipped and counted.
CheckReport check_evaluation_axiom(const FrameworkInstance& f, std::uint64_t n,
                                   std::uint64_t seed, RunMode mode = RunMode::Parallel);

// Law of disquotation, E(Q(u)) = u structurally.
CheckReport check_disquotation(const FrameworkInstance& f, std::uint64_t n,
                               std::uint64_t seed, RunMode mode = RunMode::Parallel);

// CompBehavior: eval_syn(opd_apply(Q(u), Q(x))) = poly_diff(u, x).result.
CheckReport check_comp_behavior(std::uint64_t n, std::uint64_t seed,
                                RunMode mode = RunMode::Parallel);

// MathMeaning via the independent oracle: the normal form of the symbolic
// derivative equals the limit-definition derivative exactly.
CheckReport check_math_meaning(std::uint64_t n, std::uint64_t seed,
                               RunMode mode = RunMode::Parallel);

}  // namespace polysyn
