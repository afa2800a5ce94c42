#include "grodep/costing.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grodep/channels.hpp"
#include "grodep/errors.hpp"
#include "grodep/tdch.hpp"

namespace grodep {

double mean_cost(long k, double p) {
  if (k < 1) throw std::invalid_argument("iterations per attempt must be positive");
  if (p <= 0.0) throw std::domain_error("success probability is zero: infinite expected cost");
  if (p > 1.0) throw std::invalid_argument("success probability must be at most 1");
  return static_cast<double>(k) / p;
}

namespace {

// pi sqrt(N)/4, the continuous counterpart of the noiseless stop.
double k_gr_continuous(const GroverInstance& inst) {
  return std::numbers::pi * std::sqrt(static_cast<double>(inst.dim)) / 4.0;
}

bool small_width_regime(const GroverInstance& inst, double gamma) {
  return gamma * k_gr_continuous(inst) <= 0.25;
}

}  // namespace

TdchCostReport mc_tdch_at_kgr(const GroverInstance& inst, double gamma) {
  TdchCostReport r;
  r.stop_step = inst.k_grover;
  r.probability = p_hat_tdch(inst, r.stop_step, gamma);
  r.mean_cost = mean_cost(r.stop_step, r.probability);
  const double kc = k_gr_continuous(inst);
  if (small_width_regime(inst, gamma)) {
    r.approx_small_width = kc * (1.0 + kc * gamma);
  }
  // Exact in k, asymptotic only in dropping p(k_gr) from 1.
  const double survive = std::pow(1.0 - gamma, kc);
  const double inv_n = 1.0 / static_cast<double>(inst.dim);
  r.approx_large_n = kc / (survive + (1.0 - survive) * inv_n);
  return r;
}

TdchCostReport mc_tdch_at_kmax(const GroverInstance& inst, double gamma) {
  TdchCostReport r;
  r.stop_step = k_max_exact(inst, gamma);
  r.probability = p_hat_tdch(inst, r.stop_step, gamma);
  r.mean_cost = mean_cost(r.stop_step, r.probability);
  const double kc = k_gr_continuous(inst);
  if (small_width_regime(inst, gamma)) {
    r.approx_small_width =
        kc * (1.0 + kc * gamma * (1.0 - 2.0 / (std::numbers::pi * std::numbers::pi)));
  }
  if (gamma > 0.0) {
    r.approx_large_n = static_cast<double>(inst.dim) / (9.0 - 8.0 * gamma);
  }
  return r;
}

double gamma_classical(const GroverInstance& inst, ThresholdForm form) {
  if (inst.n < 4) throw std::invalid_argument("threshold width needs n >= 4");
  if (form == ThresholdForm::exact) {
    const double k = static_cast<double>(inst.k_grover);
    const double base = (2.0 * k - 1.0) / (static_cast<double>(inst.dim) - 1.0);
    return 1.0 - std::pow(base, 1.0 / k);
  }
  const double root_n = std::sqrt(static_cast<double>(inst.dim));
  return 4.0 * std::log(2.0 * root_n / std::numbers::pi) / (std::numbers::pi * root_n);
}

double alpha_classical_bound(const GroverInstance& inst) {
  return std::min(14.0 / static_cast<double>(inst.n), 1.0);
}

std::string to_string(StopRule s) {
  switch (s) {
    case StopRule::at_k_gr: return "kgr";
    case StopRule::at_k_max: return "kmax";
    default: return "k";
  }
}

StopRule stop_rule_from_string(const std::string& s) {
  if (s == "kgr") return StopRule::at_k_gr;
  if (s == "kmax") return StopRule::at_k_max;
  throw ConfigError("unknown stop rule '" + s + "' (expected kgr, kmax, or k=<int>)");
}

namespace {

// Point estimate by simulating and scanning for the first maximum, ties
// toward the smallest step.
long simulated_argmax(const GroverInstance& inst, double alpha, long horizon,
                      const SimCapacity& cap, double* prob_out) {
  const ProbabilityCurve curve = evolve(inst, NoiseSpec(Model::ldch, alpha), horizon, cap);
  long best_k = 1;
  double best_p = curve.points[1].probability;
  for (long k = 2; k <= horizon; ++k) {
    const double p = curve.points[static_cast<std::size_t>(k)].probability;
    if (p > best_p) {
      best_p = p;
      best_k = k;
    }
  }
  *prob_out = best_p;
  return best_k;
}

}  // namespace

MeanCostReport mc_ldch(const GroverInstance& inst, double alpha, StopRule rule,
                       const McOptions& options) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("depolarizing width must be in [0, 1)");
  }
  MeanCostReport r;
  r.model = Model::ldch;
  r.n = inst.n;
  r.width = alpha;
  r.stop_rule = rule;

  const double gl = gamma_lower_equivalent(inst.n, alpha);
  const double gu = gamma_upper_equivalent(inst.n, alpha, options.upper);
  r.bounds.gamma_lower = gl;
  r.bounds.gamma_upper = gu;

  const bool can_simulate = inst.n <= options.capacity.ldch;

  if (rule == StopRule::at_k_max) {
    // Each side of the sandwich stops at its own optimal step.
    r.bounds.k_lower = k_max_exact(inst, gl);
    r.bounds.k_upper = k_max_exact(inst, gu);
    r.bounds.lower = mean_cost(r.bounds.k_lower, p_hat_tdch(inst, r.bounds.k_lower, gu));
    r.bounds.upper = mean_cost(r.bounds.k_upper, p_hat_tdch(inst, r.bounds.k_upper, gl));
    if (can_simulate) {
      const long horizon = std::max(r.bounds.k_upper, 1L) + 2;
      double p = 0.0;
      r.k_used = simulated_argmax(inst, alpha, horizon, options.capacity, &p);
      if (r.k_used == 1) {
        // One-step optimum: the closed form is exact, prefer it.
        p = p1_exact(inst, alpha);
      }
      r.probability = p;
      r.mean_cost = mean_cost(r.k_used, p);
    } else if (r.bounds.k_upper == 1) {
      // Both optimal stops are one step, so the closed form covers any n.
      r.k_used = 1;
      r.probability = p1_exact(inst, alpha);
      r.mean_cost = mean_cost(1, *r.probability);
    } else {
      r.k_used = 0;  // bounds only
    }
    return r;
  }

  const long k = (rule == StopRule::at_k_gr) ? inst.k_grover : options.fixed_k;
  if (k < 1) throw std::invalid_argument("fixed stop step must be positive");
  r.k_used = k;
  r.bounds.k_lower = k;
  r.bounds.k_upper = k;
  r.bounds.lower = mean_cost(k, p_hat_tdch(inst, k, gu));
  r.bounds.upper = mean_cost(k, p_hat_tdch(inst, k, gl));
  if (can_simulate) {
    const ProbabilityCurve curve = evolve(inst, NoiseSpec(Model::ldch, alpha), k, options.capacity);
    r.probability = curve.points[static_cast<std::size_t>(k)].probability;
    r.mean_cost = mean_cost(k, *r.probability);
  } else if (k == 1) {
    r.probability = p1_exact(inst, alpha);
    r.mean_cost = mean_cost(1, *r.probability);
  }
  if (options.want_zeta && rule == StopRule::at_k_gr) {
    r.zeta = fit_zeta(inst).zeta;
  }
  return r;
}

ZetaFit fit_zeta(const GroverInstance& inst) {
  // Fit MC(alpha)/MC(0) - 1 = slope * alpha on a pinned grid small enough
  // that the single-error series is exact to many digits, anchored at the
  // exact alpha = 0 cost so the fit sees only the slope.
  const long k = inst.k_grover;
  const double mc0 = mean_cost(k, first_order_probability(inst, k, 0.0));
  const std::array<double, 5> alphas = {2e-6, 4e-6, 6e-6, 8e-6, 1e-5};
  double num = 0.0, den = 0.0;
  std::array<double, 5> rel{};
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double mc = mean_cost(k, first_order_probability(inst, k, alphas[i]));
    rel[i] = mc / mc0 - 1.0;
    num += alphas[i] * rel[i];
    den += alphas[i] * alphas[i];
  }
  const double slope = num / den;
  ZetaFit fit;
  // slope is d(MC/MC0)/d(alpha); the coefficient is reported in units of
  // pi^2 N n / k_gr so it stays O(1) across instance sizes.
  fit.zeta = slope * static_cast<double>(k) /
             (std::numbers::pi * std::numbers::pi * static_cast<double>(inst.dim) *
              static_cast<double>(inst.n));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const double predicted = slope * alphas[i];
    fit.max_residual = std::max(fit.max_residual, std::abs(rel[i] - predicted) /
                                                      std::abs(predicted));
  }
  return fit;
}

}  // namespace grodep
