#pragma once

#include <array>
#include <vector>

#include "grodep/grover.hpp"

namespace grodep {

// ---- closed forms at k = 1 ----------------------------------------------

// Exact success probability after one iteration with per-qubit
// depolarizing width alpha:
//   2^{4-3n} [ 2^n (2^{n-1} - 1)(1 - alpha/2)^n + (2^n - 4)^2 / 16 ].
double p1_exact(const GroverInstance& inst, double alpha);

// Large-N simplification 2^{-n} [ 8 (1 - alpha/2)^n + 1 ].
double p1_large_n(const GroverInstance& inst, double alpha);

// ---- width-equivalence bounds --------------------------------------------

// The local channel on n qubits is sandwiched between two total
// depolarizing channels. gamma_lower = 1 - (1-alpha)^n gives a lower bound
// on the success probability when plugged into the total-channel closed
// form; for the upper bound either the simple power gamma = alpha^n or the
// tighter default gamma = n alpha / (2 + n alpha).
enum class UpperBound { power, improved };

double gamma_lower_equivalent(int n, double alpha);
double gamma_upper_equivalent(int n, double alpha, UpperBound kind = UpperBound::improved);

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
};

// Sandwich on the success probability after k steps of the local model.
BoundPair probability_bounds(const GroverInstance& inst, long k, double alpha,
                             UpperBound kind = UpperBound::improved);

// ---- single-error subspace engine ----------------------------------------

// The Grover unitary and any single Pauli error on the marked-qubit
// pattern keep the state inside a four-dimensional (non-orthogonal) span
// {|t>, |s>, |x_t>, |even>}: the marked state, the uniform state, the
// marked state with one qubit flipped, and the uniform superposition of
// the even-index states. Everything needed for the first-order series is
// a 4x4 matrix algebra, independent of N.
namespace subspace {

using Mat = std::array<std::array<double, 4>, 4>;
using Vec = std::array<double, 4>;

struct Operators {
  double lambda = 0.0;  // 2/sqrt(N)
  Mat grover{};         // coefficient action of G
  Mat pauli_x{};        // X on the error qubit
  Mat pauli_y{};        // Y on the error qubit, modulo a global phase
  Mat pauli_z{};        // Z on the error qubit
  Vec readout{};        // <t| row: amplitude on the marked state

  static Operators make(int n);
};

Vec apply(const Mat& m, const Vec& v);
double dot(const Vec& x, const Vec& y);

// Rebuild the dense state vector for coefficients c (marked state 0, error
// qubit 0). For validating the engine against dense simulation.
std::vector<Complex> embed(const Vec& c, int n);

}  // namespace subspace

// First-order structure function: total weight, over all k steps and all
// n qubits, of the histories with exactly one Pauli error,
//   f1(n, k) = n sum_{l=1..k} sum_{P in {X,Y,Z}} |<t| A^{k-l} B_P A^l phi0|^2,
// evaluated with O(k) 4x4 matrix-vector products (prefix states, suffix
// readout rows).
double f1(const GroverInstance& inst, long k);

// Success probability truncated after single-error histories:
//   (1 - 3 alpha/4)^{nk} p(k) + (1 - 3 alpha/4)^{nk-1} (alpha/4) f1(n, k).
// A lower bound on the simulated probability (discarded terms are
// nonnegative). k = 0 gives 1/N.
double first_order_probability(const GroverInstance& inst, long k, double alpha);

}  // namespace grodep
