#pragma once

#include <string>

namespace grodep {

// Noise model selector. tdch mixes the whole register toward I/N with one
// width parameter gamma per step; ldch applies an independent single-qubit
// depolarizing channel of width alpha to every qubit after each step.
enum class Model { tdch, ldch };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

// Qubit limits for dense density-matrix simulation. A density matrix holds
// 4^n complex doubles, so the defaults (16 GiB would be n = 15) keep runs
// comfortably inside desk-scale memory. The environment variable
// GROVER_SIM_MAX_QUBITS overrides both limits at once; explicit config
// values override the environment.
struct SimCapacity {
  int tdch = 14;
  int ldch = 12;

  int limit_for(Model m) const { return m == Model::tdch ? tdch : ldch; }

  // Defaults adjusted by GROVER_SIM_MAX_QUBITS if set. Throws ConfigError
  // when the variable is present but not an integer in [1, 20].
  static SimCapacity resolve();

  // Throws CapacityError if n exceeds the limit for the model.
  void check(Model m, int n) const;
};

}  // namespace grodep
