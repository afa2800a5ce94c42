#include "grodep/capacity.hpp"

#include <cstdlib>
#include <cstring>

#include "grodep/errors.hpp"

namespace grodep {

std::string to_string(Model m) { return m == Model::tdch ? "tdch" : "ldch"; }

Model model_from_string(const std::string& s) {
  if (s == "tdch") return Model::tdch;
  if (s == "ldch") return Model::ldch;
  throw ConfigError("unknown model '" + s + "' (expected tdch or ldch)");
}

SimCapacity SimCapacity::resolve() {
  SimCapacity cap;
  const char* env = std::getenv("GROVER_SIM_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return cap;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1 || v > 20) {
    throw ConfigError("GROVER_SIM_MAX_QUBITS must be an integer in [1, 20], got '" +
                      std::string(env) + "'");
  }
  cap.tdch = cap.ldch = static_cast<int>(v);
  return cap;
}

void SimCapacity::check(Model m, int n) const {
  const int limit = limit_for(m);
  if (n > limit) {
    throw CapacityError("dense simulation of n=" + std::to_string(n) +
                        " qubits exceeds the " + to_string(m) + " limit of " +
                        std::to_string(limit) +
                        " (set GROVER_SIM_MAX_QUBITS to raise it)");
  }
}

}  // namespace grodep
