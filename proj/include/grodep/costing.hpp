#pragma once

#include <optional>

#include "grodep/capacity.hpp"
#include "grodep/grover.hpp"
#include "grodep/ldch.hpp"

namespace grodep {

// Expected oracle calls of repeat-until-success with k iterations per
// attempt and per-attempt success probability p: k/p. Rejects p <= 0
// (infinite cost) with std::domain_error and p > 1 or k < 1 with
// std::invalid_argument.
double mean_cost(long k, double p);

// Mean cost of the total depolarizing model at a fixed stop rule, with
// the regime approximations alongside the exact value when they apply.
struct TdchCostReport {
  long stop_step = 0;
  double probability = 0.0;
  double mean_cost = 0.0;
  // Small-width expansion; attached when gamma * (pi sqrt(N)/4) <= 1/4.
  std::optional<double> approx_small_width;
  // Large-N form; attached for gamma > 0 (kmax stop) or always (kgr stop).
  std::optional<double> approx_large_n;
};

TdchCostReport mc_tdch_at_kgr(const GroverInstance& inst, double gamma);
TdchCostReport mc_tdch_at_kmax(const GroverInstance& inst, double gamma);

// Width at which the total-channel mean cost at k_grover equals the
// expected classical exhaustive-search cost N/2 (up to the stated form):
//   exact:      1 - ((2 k_gr - 1)/(N - 1))^{1/k_gr}
//   asymptotic: 4 ln(2 sqrt(N)/pi) / (pi sqrt(N))
enum class ThresholdForm { exact, asymptotic };
double gamma_classical(const GroverInstance& inst, ThresholdForm form);

// Local-model counterpart via the lower width equivalence: quantum search
// stays cheaper than classical while alpha is below about 14/n (capped
// at 1 for tiny n).
double alpha_classical_bound(const GroverInstance& inst);

// ---- local-model mean cost ------------------------------------------------

enum class StopRule { at_k_gr, at_k_max, at_fixed_k };

std::string to_string(StopRule s);
StopRule stop_rule_from_string(const std::string& s);

// Sandwich on the local-model mean cost from the width-equivalence bounds.
// For a fixed k both bounds use that k; for the optimal-stop rule each
// side optimizes its own equivalent total width, so the two sides may
// stop at different steps (k_lower/k_upper record them).
struct MeanCostBounds {
  double lower = 0.0;
  double upper = 0.0;
  long k_lower = 0;
  long k_upper = 0;
  double gamma_lower = 0.0;
  double gamma_upper = 0.0;
};

struct MeanCostReport {
  Model model = Model::ldch;
  int n = 0;
  double width = 0.0;
  StopRule stop_rule = StopRule::at_k_gr;
  long k_used = 0;
  // Point estimate from simulation (or the k = 1 closed form when the
  // optimum is one step); absent when n exceeds simulation capacity and
  // no closed form applies.
  std::optional<double> probability;
  std::optional<double> mean_cost;
  MeanCostBounds bounds;
  // Small-width cost slope, MC(alpha) ~ MC(0)(1 + zeta pi^2 N n alpha / k_gr);
  // attached on request for the k_gr stop rule.
  std::optional<double> zeta;
};

struct McOptions {
  UpperBound upper = UpperBound::improved;
  long fixed_k = 0;
  SimCapacity capacity = SimCapacity::resolve();
  bool want_zeta = false;
};

// Mean cost of the local model under a stop rule, alpha in [0, 1).
MeanCostReport mc_ldch(const GroverInstance& inst, double alpha, StopRule rule,
                       const McOptions& options = {});

// Least-squares slope of MC(k_gr, alpha) against alpha over a pinned
// small-alpha grid {2,4,6,8,10} * 1e-6, anchored at the exact MC(0), in
// units of MC(0) pi^2 N n / k_gr. max_residual is the worst relative misfit.
struct ZetaFit {
  double zeta = 0.0;
  double max_residual = 0.0;
};

ZetaFit fit_zeta(const GroverInstance& inst);

}  // namespace grodep
