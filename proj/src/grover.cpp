#include "grodep/grover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace grodep {

GroverInstance::GroverInstance(int qubits, std::uint64_t marked) {
  if (qubits < 1 || qubits > 62) {
    throw std::invalid_argument("qubit count must be in [1, 62]");
  }
  n = qubits;
  dim = std::uint64_t{1} << qubits;
  if (marked >= dim) {
    throw std::invalid_argument("marked index must be in [0, 2^n)");
  }
  target = marked;
  const double root_n = std::sqrt(static_cast<double>(dim));
  theta = std::asin(1.0 / root_n);
  // Never within rounding distance of an integer for n >= 1, so a plain
  // floor is safe here.
  k_grover = static_cast<long>(std::floor(std::numbers::pi / 4.0 * root_n));
}

double noiseless_probability(const GroverInstance& inst, long k) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * inst.theta);
  return s * s;
}

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix multiply(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
  ComplexMatrix out(x.dim);
  for (std::size_t i = 0; i < x.dim; ++i) {
    for (std::size_t k = 0; k < x.dim; ++k) {
      const Complex xv = x.at(i, k);
      if (xv == Complex{}) continue;
      for (std::size_t j = 0; j < x.dim; ++j) out.at(i, j) += xv * y.at(k, j);
    }
  }
  return out;
}

std::vector<Complex> apply(const ComplexMatrix& m, const std::vector<Complex>& v) {
  if (v.size() != m.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<Complex> out(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < m.dim; ++j) acc += m.at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix grover_operator(const GroverInstance& inst, const SimCapacity& cap) {
  cap.check(Model::tdch, inst.n);
  const std::size_t dim = inst.dim;
  const std::size_t t = inst.target;
  const double a = 2.0 / static_cast<double>(dim);
  // (2|s><s| - I)(2|t><t| - I) expanded entrywise: columns j != t carry
  // delta_ij - a, the marked column carries a - delta_it.
  ComplexMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      double v = (j == t) ? a : -a;
      if (i == j) v += (j == t) ? -1.0 : 1.0;
      g.at(i, j) = v;
    }
  }
  return g;
}

std::vector<Complex> uniform_state(const GroverInstance& inst, const SimCapacity& cap) {
  cap.check(Model::tdch, inst.n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(inst.dim));
  return std::vector<Complex>(inst.dim, Complex{amp, 0.0});
}

void grover_step_inplace(const GroverInstance& inst, std::vector<Complex>& v) {
  if (v.size() != inst.dim) throw std::invalid_argument("dimension mismatch");
  v[inst.target] = -v[inst.target];
  Complex sum{};
  for (const Complex& x : v) sum += x;
  const Complex twice_mean = (2.0 / static_cast<double>(inst.dim)) * sum;
  for (Complex& x : v) x -= twice_mean;
}

}  // namespace grodep
