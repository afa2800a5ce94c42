#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "grodep/grover.hpp"

namespace grodep {

// Dense density matrix over n qubits, row-major vector of 4^n complex
// doubles. Kernels mutate in place; the value-returning wrappers below the
// class are for callers that prefer a functional style.
class DensityMatrix {
 public:
  explicit DensityMatrix(int qubits);

  int qubits() const { return n_; }
  std::uint64_t dim() const { return dim_; }

  Complex& at(std::uint64_t i, std::uint64_t j) { return a_[i * dim_ + j]; }
  const Complex& at(std::uint64_t i, std::uint64_t j) const { return a_[i * dim_ + j]; }
  const std::vector<Complex>& data() const { return a_; }

  // rho = |psi><psi|
  static DensityMatrix pure(int qubits, const std::vector<Complex>& psi);
  // rho = I/N
  static DensityMatrix maximally_mixed(int qubits);
  // rho = |s><s| for the uniform superposition
  static DensityMatrix uniform(int qubits);

  double trace_real() const;
  double purity() const;  // Re tr(rho^2)
  // max_ij |rho_ij - conj(rho_ji)|
  double hermiticity_defect() const;
  // diagonal entry, i.e. probability of measuring basis state i
  double probability_of(std::uint64_t i) const;
  double max_abs_diff(const DensityMatrix& other) const;

  // Conjugation by the oracle 2|t><t| - I: negates row t and column t
  // except the (t,t) entry. O(N).
  void apply_oracle(std::uint64_t target);
  // Conjugation by the diffusion 2|s><s| - I, expanded in row/column sums
  // so the whole update is one O(N^2) pass.
  void apply_diffusion();
  // One Grover iteration: oracle then diffusion.
  void apply_grover(const GroverInstance& inst);

  // Total depolarizing: rho <- (1-gamma) rho + gamma I/N.
  void apply_total_depolarizing(double gamma);
  // Single-qubit depolarizing of width alpha on qubit q (q = 0 is the
  // least significant bit of the basis index). Entries with equal q-bits
  // mix with their bit-flipped partner; entries with opposite q-bits are
  // damped by (1-alpha).
  void apply_local_depolarizing(int qubit, double alpha);
  // The same channel on every qubit in sequence (order is irrelevant;
  // the per-qubit channels commute).
  void apply_local_depolarizing_all(double alpha);

  // rho += w |psi><psi|
  void accumulate_outer(const std::vector<Complex>& psi, double w);

 private:
  int n_;
  std::uint64_t dim_;
  std::vector<Complex> a_;
};

// Functional wrappers: take by value, mutate, return.
DensityMatrix with_oracle(DensityMatrix rho, std::uint64_t target);
DensityMatrix with_diffusion(DensityMatrix rho);
DensityMatrix with_grover(DensityMatrix rho, const GroverInstance& inst);
DensityMatrix with_total_depolarizing(DensityMatrix rho, double gamma);
DensityMatrix with_local_depolarizing(DensityMatrix rho, int qubit, double alpha);

}  // namespace grodep
