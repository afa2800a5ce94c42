#pragma once

#include <cstdint>
#include <vector>

#include "grodep/curve.hpp"
#include "grodep/density_matrix.hpp"

namespace grodep {

// Model plus width, validated on construction: gamma in [0,1] for tdch,
// alpha in [0,1] for ldch. Throws std::invalid_argument otherwise.
struct NoiseSpec {
  Model model;
  double width;

  NoiseSpec(Model m, double w);
};

// One noisy Grover step: unitary iteration first, then the channel.
void apply_noisy_step(DensityMatrix& rho, const GroverInstance& inst, const NoiseSpec& noise);

// Evolve rho0 = |s><s| for `steps` noisy iterations and record the marked
// -state probability after each one. points[k] is the probability after k
// steps, so points[0] = 1/N and the curve has steps+1 entries.
ProbabilityCurve evolve(const GroverInstance& inst, const NoiseSpec& noise, long steps,
                        const SimCapacity& cap = SimCapacity::resolve());

// One term of the local-channel Kraus expansion: a Pauli letter per qubit
// (0 = I, 1 = X, 2 = Y, 3 = Z). Letter q acts on qubit q (bit q of the
// basis index).
struct KrausLabel {
  std::vector<std::uint8_t> letters;

  static KrausLabel from_index(int n, std::uint64_t idx);
  int identity_count() const;
  // (1 - 3 alpha/4)^{#I} (alpha/4)^{n - #I}
  double weight(double alpha) const;
};

// Apply the Pauli word of `label` to a state vector in place.
void apply_pauli_word(const KrausLabel& label, std::vector<Complex>& v);

// Brute-force check path for the local model: enumerate all 4^{n k} Pauli
// error histories of k steps, propagate a state vector down each, and
// accumulate weight * |psi><psi|. Exponential; guarded to n*k <= 8.
DensityMatrix enumerate_kraus_paths(const GroverInstance& inst, double alpha, long k);

}  // namespace grodep
