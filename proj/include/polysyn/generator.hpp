#pragma once

#include "polysyn/expr.hpp"
#include "polysyn/semantics.hpp"
#include "polysyn/synvalue.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polysyn {

// splitmix64. Fully specified 64-bit arithmetic, so streams are identical on
// every platform; std:: distributions are deliberately not used anywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound >= 1; rejection sampling, no modulo bias
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  // uniform in [lo, hi] inclusive
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  std::uint64_t state_;
};

// Independent per-sample stream; checkers draw sample i from
// substream(seed, i) so reports do not depend on worker count.
SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

struct GenConfig {
  std::uint32_t max_depth = 8;
  std::vector<std::string> variable_pool = {"x", "y", "z", "w"};
  std::int64_t coeff_magnitude = 100;  // |numerator|, denominator <= 100
  std::uint32_t max_exponent = 6;      // includes 0, so the n = 0 branch is hit
  // Upper bound on the estimated monomial count of the generated tree;
  // keeps normal forms far away from the kMonomialBudget hard error.
  std::uint64_t size_budget = 10'000;
};

// Every constructor is drawn with probability >= 0.1 at each depth below
// max_depth; leaves are variables or constants.
Expr gen_poly_expr(SplitMix64& rng, const GenConfig& cfg = {});

SynValue gen_synvalue(SplitMix64& rng, const GenConfig& cfg = {});

VarName gen_variable(SplitMix64& rng, const GenConfig& cfg = {});

Rational gen_rational(SplitMix64& rng, const GenConfig& cfg = {});

// Covers the whole variable pool plus every free variable of `cover`.
Assignment gen_assignment(SplitMix64& rng, const Expr& cover, const GenConfig& cfg = {});

}  // namespace polysyn
