#include "polysyn/generator.hpp"

namespace polysyn {

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
  rng.next();  // decorrelate nearby indices
  return rng;
}

namespace {

// saturating estimate of the monomial count of the expansion
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s < a ? ~std::uint64_t{0} : s;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > ~std::uint64_t{0} / a) return ~std::uint64_t{0};
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t a, std::uint32_t n) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < n; ++i) r = sat_mul(r, a);
  return r;
}

struct Gen {
  SplitMix64& rng;
  const GenConfig& cfg;

  Expr leaf(std::uint64_t& est) {
    est = 1;
    if (rng.below(2) == 0) return Expr::var(gen_variable(rng, cfg));
    return Expr::constant(gen_rational(rng, cfg));
  }

  Expr expr(std::uint32_t depth, std::uint64_t& est) {
    if (depth == 0) return leaf(est);
    switch (rng.below(6)) {
      case 0:
      case 1:
        return leaf(est);
      case 2: {
        std::uint64_t ea, eb;
        Expr a = expr(depth - 1, ea);
        Expr b = expr(depth - 1, eb);
        est = sat_add(ea, eb);
        if (est > cfg.size_budget) return leaf(est);
        return Expr::add(std::move(a), std::move(b));
      }
      case 3: {
        std::uint64_t ea, eb;
        Expr a = expr(depth - 1, ea);
        Expr b = expr(depth - 1, eb);
        est = sat_add(ea, eb);
        if (est > cfg.size_budget) return leaf(est);
        return Expr::sub(std::move(a), std::move(b));
      }
      case 4: {
        std::uint64_t ea, eb;
        Expr a = expr(depth - 1, ea);
        Expr b = expr(depth - 1, eb);
        est = sat_mul(ea, eb);
        if (est > cfg.size_budget) return leaf(est);
        return Expr::mul(std::move(a), std::move(b));
      }
      default: {
        std::uint64_t eu;
        Expr u = expr(depth - 1, eu);
        auto n = static_cast<std::uint32_t>(rng.below(cfg.max_exponent + 1));
        est = sat_pow(eu, n);
        if (est > cfg.size_budget) return leaf(est);
        return Expr::pow(std::move(u), n);
      }
    }
  }

  SynValue syn_leaf(std::uint64_t& est) {
    est = 1;
    if (rng.below(2) == 0) return SynValue::var(gen_variable(rng, cfg));
    return SynValue::con(gen_rational(rng, cfg));
  }

  SynValue syn(std::uint32_t depth, std::uint64_t& est) {
    if (depth == 0) return syn_leaf(est);
    switch (rng.below(6)) {
      case 0:
      case 1:
        return syn_leaf(est);
      case 2: {
        std::uint64_t ea, eb;
        SynValue a = syn(depth - 1, ea);
        SynValue b = syn(depth - 1, eb);
        est = sat_add(ea, eb);
        if (est > cfg.size_budget) return syn_leaf(est);
        return SynValue::plus(std::move(a), std::move(b));
      }
      case 3: {
        std::uint64_t ea, eb;
        SynValue a = syn(depth - 1, ea);
        SynValue b = syn(depth - 1, eb);
        est = sat_add(ea, eb);
        if (est > cfg.size_budget) return syn_leaf(est);
        return SynValue::minus(std::move(a), std::move(b));
      }
      case 4: {
        std::uint64_t ea, eb;
        SynValue a = syn(depth - 1, ea);
        SynValue b = syn(depth - 1, eb);
        est = sat_mul(ea, eb);
        if (est > cfg.size_budget) return syn_leaf(est);
        return SynValue::times(std::move(a), std::move(b));
      }
      default: {
        std::uint64_t eu;
        SynValue u = syn(depth - 1, eu);
        auto n = static_cast<std::uint32_t>(rng.below(cfg.max_exponent + 1));
        est = sat_pow(eu, n);
        if (est > cfg.size_budget) return syn_leaf(est);
        return SynValue::power(std::move(u), n);
      }
    }
  }
};

}  // namespace

Expr gen_poly_expr(SplitMix64& rng, const GenConfig& cfg) {
  std::uint64_t est = 0;
  return Gen{rng, cfg}.expr(cfg.max_depth, est);
}

SynValue gen_synvalue(SplitMix64& rng, const GenConfig& cfg) {
  std::uint64_t est = 0;
  return Gen{rng, cfg}.syn(cfg.max_depth, est);
}

VarName gen_variable(SplitMix64& rng, const GenConfig& cfg) {
  return VarName(cfg.variable_pool[rng.below(cfg.variable_pool.size())]);
}

Rational gen_rational(SplitMix64& rng, const GenConfig& cfg) {
  std::int64_t num = rng.range(-cfg.coeff_magnitude, cfg.coeff_magnitude);
  std::int64_t den = rng.range(1, cfg.coeff_magnitude);
  return Rational(BigInt(num), BigInt(den));
}

Assignment gen_assignment(SplitMix64& rng, const Expr& cover, const GenConfig& cfg) {
  Assignment a;
  for (const auto& name : cfg.variable_pool) {
    a.emplace(VarName(name), gen_rational(rng, cfg));
  }
  for (const auto& v : free_vars(cover)) {
    if (!a.count(v)) a.emplace(v, gen_rational(rng, cfg));
  }
  return a;
}

}  // namespace polysyn
