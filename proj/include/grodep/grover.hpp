#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "grodep/capacity.hpp"

namespace grodep {

using Complex = std::complex<double>;

// Search instance over N = 2^n computational basis states with one marked
// index. theta is the rotation half-angle of one Grover iteration,
// sin(theta) = 1/sqrt(N); k_grover is the standard noiseless stopping step
// floor((pi/4) sqrt(N)).
struct GroverInstance {
  int n = 0;
  std::uint64_t target = 0;
  std::uint64_t dim = 0;
  double theta = 0.0;
  long k_grover = 0;

  GroverInstance(int qubits, std::uint64_t marked);
};

// Success probability sin^2((2k+1) theta) of measuring the marked state
// after k noiseless iterations.
double noiseless_probability(const GroverInstance& inst, long k);

// Dense square matrix of complex doubles, row-major storage. Only what the
// simulator and tests need, not a general linear-algebra library.
struct ComplexMatrix {
  std::size_t dim = 0;
  std::vector<Complex> a;

  explicit ComplexMatrix(std::size_t d) : dim(d), a(d * d) {}
  Complex& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }

  static ComplexMatrix identity(std::size_t d);
};

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y);
std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v);

// One Grover iteration G = (I - 2|s><s|)(I - 2|t><t|) as a dense matrix.
// The two reflections differ from the textbook 2|s><s| - I form only by a
// global sign, which cancels in every probability this library reports.
// Allocates N^2 entries, so it is capacity-checked.
ComplexMatrix grover_operator(const GroverInstance& inst,
                              const SimCapacity& cap = SimCapacity::resolve());

// |s> = uniform superposition, as a state vector of length N.
std::vector<Complex> uniform_state(const GroverInstance& inst,
                                   const SimCapacity& cap = SimCapacity::resolve());

// In-place Grover iteration on a state vector: oracle sign flip on the
// marked amplitude, then reflection through the uniform state, with the
// same overall sign convention as grover_operator. O(N).
void grover_step_inplace(const GroverInstance& inst, std::vector<Complex>& v);

}  // namespace grodep
