#pragma once

#include "grodep/grover.hpp"

namespace grodep {

// Success probability after k iterations under the total depolarizing
// channel: the coherent term decays geometrically and the rest of the
// weight sits on the uniform mixture,
//   p_hat(k) = (1-gamma)^k sin^2((2k+1) theta) + (1 - (1-gamma)^k)/N.
// Exact for the simulated process, not an approximation.
double p_hat_tdch(const GroverInstance& inst, long k, double gamma);

// Intermediates of the optimal-stop derivation, exposed so tests can pin
// the geometry. The continuous maximizer of p_hat is
//   k_cont = f(delta)/(4 theta) - 1/2,
// where delta = sin(phi) = (1 + (4 theta / ln(1-gamma))^2)^{-1/2} and
//   f(delta) = pi - arcsin(delta) - arcsin((1 - 2/N) delta).
// x = (2 k_cont + 1) theta is the stationarity angle and z = delta/N the
// mixed-floor correction term.
struct KmaxDerivation {
  double delta = 0.0;
  double phi = 0.0;
  double f_delta = 0.0;
  double x = 0.0;
  double z = 0.0;
  double continuous_k = 0.0;
};

KmaxDerivation k_max_derivation(const GroverInstance& inst, double gamma);

// Optimal iteration count under total depolarizing, from the closed form:
// max(floor(f(delta)/(4 theta)), 1). The floor gets a +1e-12 nudge so a
// value that is an integer up to roundoff does not flap downward.
long k_max_exact(const GroverInstance& inst, double gamma);

// Exhaustive argmax of p_hat over k in [1, horizon] (default 2 k_grover),
// ties broken toward the smallest k. Independent check of k_max_exact.
long k_max_grid_search(const GroverInstance& inst, double gamma, long horizon = 0);

// Small-width estimate max(floor(pi sqrt(N)/4 - N gamma / 8), 1), valid
// when gamma is at most about 1/sqrt(N).
long k_max_small_gamma(const GroverInstance& inst, double gamma);

// Large-width estimate, independent of N:
//   g(gamma) = -1/ln(1-gamma) + (1/2) sqrt(1 + 4/ln^2(1-gamma)),
// k = max(floor(g), 1). Requires gamma > 0 (throws std::domain_error at 0);
// returns 1 at gamma = 1.
long k_max_large_gamma(double gamma);

}  // namespace grodep
