#pragma once

// Test-side oracles, deliberately independent of the library kernels they
// check: dense Kronecker-product operators, explicit conjugations, and a
// couple of small numeric helpers. Everything here is O(dim^3)-ish brute
// force; tests keep dimensions tiny.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "grodep/density_matrix.hpp"
#include "grodep/grover.hpp"

namespace testsupport {

using grodep::Complex;
using grodep::ComplexMatrix;

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) {
  return std::mt19937_64(seed);
}

inline std::vector<Complex> random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<Complex> v(std::size_t{1} << n);
  double norm2 = 0.0;
  for (Complex& x : v) {
    x = Complex{g(rng), g(rng)};
    norm2 += std::norm(x);
  }
  const double s = 1.0 / std::sqrt(norm2);
  for (Complex& x : v) x *= s;
  return v;
}

// A A^dagger scaled to unit trace: Hermitian, positive, trace one.
inline grodep::DensityMatrix random_density(int n, std::mt19937_64& rng) {
  const std::uint64_t d = std::uint64_t{1} << n;
  ComplexMatrix a(d);
  std::normal_distribution<double> g;
  for (Complex& x : a.a) x = Complex{g(rng), g(rng)};
  grodep::DensityMatrix rho(n);
  double trace = 0.0;
  for (std::uint64_t i = 0; i < d; ++i) {
    for (std::uint64_t j = 0; j < d; ++j) {
      Complex acc{};
      for (std::uint64_t k = 0; k < d; ++k) acc += a.at(i, k) * std::conj(a.at(j, k));
      rho.at(i, j) = acc;
    }
    trace += rho.at(i, i).real();
  }
  for (std::uint64_t i = 0; i < d; ++i) {
    for (std::uint64_t j = 0; j < d; ++j) rho.at(i, j) /= trace;
  }
  return rho;
}

inline ComplexMatrix pauli(int letter) {
  ComplexMatrix p(2);
  const Complex im{0.0, 1.0};
  switch (letter) {
    case 0: p.at(0, 0) = 1.0; p.at(1, 1) = 1.0; break;
    case 1: p.at(0, 1) = 1.0; p.at(1, 0) = 1.0; break;
    case 2: p.at(0, 1) = -im; p.at(1, 0) = im; break;
    default: p.at(0, 0) = 1.0; p.at(1, 1) = -1.0; break;
  }
  return p;
}

// (A kron B): B owns the low index bits.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim * b.dim);
  for (std::size_t i1 = 0; i1 < a.dim; ++i1) {
    for (std::size_t j1 = 0; j1 < a.dim; ++j1) {
      const Complex av = a.at(i1, j1);
      if (av == Complex{}) continue;
      for (std::size_t i2 = 0; i2 < b.dim; ++i2) {
        for (std::size_t j2 = 0; j2 < b.dim; ++j2) {
          out.at(i1 * b.dim + i2, j1 * b.dim + j2) = av * b.at(i2, j2);
        }
      }
    }
  }
  return out;
}

// Single-qubit operator on bit q of the index.
inline ComplexMatrix op_on_qubit(int n, int q, const ComplexMatrix& p) {
  ComplexMatrix low = ComplexMatrix::identity(std::size_t{1} << q);
  ComplexMatrix high = ComplexMatrix::identity(std::size_t{1} << (n - 1 - q));
  return kron(high, kron(p, low));
}

inline ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim);
  for (std::size_t i = 0; i < m.dim; ++i) {
    for (std::size_t j = 0; j < m.dim; ++j) out.at(i, j) = std::conj(m.at(j, i));
  }
  return out;
}

inline ComplexMatrix to_matrix(const grodep::DensityMatrix& rho) {
  ComplexMatrix m(rho.dim());
  for (std::uint64_t i = 0; i < rho.dim(); ++i) {
    for (std::uint64_t j = 0; j < rho.dim(); ++j) m.at(i, j) = rho.at(i, j);
  }
  return m;
}

inline grodep::DensityMatrix from_matrix(int n, const ComplexMatrix& m) {
  grodep::DensityMatrix rho(n);
  for (std::uint64_t i = 0; i < rho.dim(); ++i) {
    for (std::uint64_t j = 0; j < rho.dim(); ++j) rho.at(i, j) = m.at(i, j);
  }
  return rho;
}

inline ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return multiply(multiply(u, rho), adjoint(u));
}

// Independent dense Grover operator: explicit oracle and diffusion factors.
inline ComplexMatrix dense_grover(const grodep::GroverInstance& inst) {
  const std::uint64_t d = inst.dim;
  ComplexMatrix oracle(d), diffusion(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    oracle.at(i, i) = (i == inst.target) ? 1.0 : -1.0;
    for (std::uint64_t j = 0; j < d; ++j) {
      diffusion.at(i, j) = 2.0 / static_cast<double>(d) - (i == j ? 1.0 : 0.0);
    }
  }
  return multiply(diffusion, oracle);
}

// (1 - 3a/4) rho + (a/4)(X rho X + Y rho Y + Z rho Z) on one qubit, dense.
inline ComplexMatrix dense_local_channel(int n, int q, double alpha, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.dim);
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] = (1.0 - 0.75 * alpha) * rho.a[i];
  for (int letter = 1; letter <= 3; ++letter) {
    const ComplexMatrix p = op_on_qubit(n, q, pauli(letter));
    const ComplexMatrix term = conjugate_by(p, rho);
    for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += (alpha / 4.0) * term.a[i];
  }
  return out;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.a.size(); ++i) {
    worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
  }
  return worst;
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Smallest eigenvalue of a Hermitian matrix by power iteration on cI - H.
// Plenty for "is this positive up to tolerance" checks at test sizes.
inline double min_eigenvalue_hermitian(const ComplexMatrix& h) {
  const std::size_t d = h.dim;
  double shift = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < d; ++j) row += std::abs(h.at(i, j));
    shift = std::max(shift, row);  // Gershgorin bound on |eigenvalues|
  }
  std::vector<Complex> v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = 1.0 + 1e-3 * static_cast<double>(i);
  double rayleigh = 0.0;
  for (int iter = 0; iter < 600; ++iter) {
    std::vector<Complex> w(d);
    for (std::size_t i = 0; i < d; ++i) {
      Complex acc = shift * v[i];
      for (std::size_t j = 0; j < d; ++j) acc -= h.at(i, j) * v[j];
      w[i] = acc;
    }
    double norm2 = 0.0;
    for (const Complex& x : w) norm2 += std::norm(x);
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& x : w) x *= inv;
    v = std::move(w);
  }
  Complex num{};
  for (std::size_t i = 0; i < d; ++i) {
    Complex acc{};
    for (std::size_t j = 0; j < d; ++j) acc += h.at(i, j) * v[j];
    num += std::conj(v[i]) * acc;
  }
  rayleigh = num.real();
  return rayleigh;  // v converged to the eigenvector of the smallest eigenvalue of H
}

// Ordinary least squares y = slope x + intercept.
inline std::pair<double, double> fit_line(const std::vector<double>& xs,
                                          const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {slope, (sy - slope * sx) / n};
}

}  // namespace testsupport
