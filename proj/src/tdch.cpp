#include "grodep/tdch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grodep {

namespace {

void check_width(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("mixing width must be in [0, 1]");
  }
}

// floor with a +1e-12 nudge: a value that is an integer up to roundoff
// must not flap to the integer below.
long guarded_floor(double v) { return static_cast<long>(std::floor(v + 1e-12)); }

}  // namespace

double p_hat_tdch(const GroverInstance& inst, long k, double gamma) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  check_width(gamma);
  const double coherent = std::pow(1.0 - gamma, static_cast<double>(k));
  const double inv_n = 1.0 / static_cast<double>(inst.dim);
  return coherent * noiseless_probability(inst, k) + (1.0 - coherent) * inv_n;
}

KmaxDerivation k_max_derivation(const GroverInstance& inst, double gamma) {
  check_width(gamma);
  const double inv_n = 1.0 / static_cast<double>(inst.dim);
  KmaxDerivation d;
  if (gamma == 0.0) {
    d.delta = 0.0;
  } else if (gamma == 1.0) {
    d.delta = 1.0;
  } else {
    const double r = 4.0 * inst.theta / std::log1p(-gamma);
    d.delta = 1.0 / std::sqrt(1.0 + r * r);
  }
  d.phi = std::asin(d.delta);
  d.z = d.delta * inv_n;
  d.f_delta = std::numbers::pi - d.phi - std::asin((1.0 - 2.0 * inv_n) * d.delta);
  d.continuous_k = d.f_delta / (4.0 * inst.theta) - 0.5;
  d.x = (2.0 * d.continuous_k + 1.0) * inst.theta;
  return d;
}

long k_max_exact(const GroverInstance& inst, double gamma) {
  const KmaxDerivation d = k_max_derivation(inst, gamma);
  return std::max(guarded_floor(d.f_delta / (4.0 * inst.theta)), 1L);
}

long k_max_grid_search(const GroverInstance& inst, double gamma, long horizon) {
  check_width(gamma);
  if (horizon <= 0) horizon = 2 * std::max(inst.k_grover, 1L);
  long best_k = 1;
  double best_p = p_hat_tdch(inst, 1, gamma);
  for (long k = 2; k <= horizon; ++k) {
    const double p = p_hat_tdch(inst, k, gamma);
    if (p > best_p) {
      best_p = p;
      best_k = k;
    }
  }
  return best_k;
}

long k_max_small_gamma(const GroverInstance& inst, double gamma) {
  check_width(gamma);
  const double root_n = std::sqrt(static_cast<double>(inst.dim));
  const double v = std::numbers::pi * root_n / 4.0 - static_cast<double>(inst.dim) * gamma / 8.0;
  return std::max(guarded_floor(v), 1L);
}

long k_max_large_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::domain_error("large-width estimate requires gamma in (0, 1]");
  }
  if (gamma == 1.0) return 1;
  const double l = std::log1p(-gamma);
  const double g = -1.0 / l + 0.5 * std::sqrt(1.0 + 4.0 / (l * l));
  return std::max(guarded_floor(g), 1L);
}

}  // namespace grodep
