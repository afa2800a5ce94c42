#include "grodep/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace grodep {

DensityMatrix::DensityMatrix(int qubits) {
  if (qubits < 1 || qubits > 15) {
    throw std::invalid_argument("density matrix supports 1 to 15 qubits");
  }
  n_ = qubits;
  dim_ = std::uint64_t{1} << qubits;
  a_.assign(dim_ * dim_, Complex{});
}

DensityMatrix DensityMatrix::pure(int qubits, const std::vector<Complex>& psi) {
  DensityMatrix rho(qubits);
  if (psi.size() != rho.dim_) throw std::invalid_argument("state length mismatch");
  rho.accumulate_outer(psi, 1.0);
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int qubits) {
  DensityMatrix rho(qubits);
  const double p = 1.0 / static_cast<double>(rho.dim_);
  for (std::uint64_t i = 0; i < rho.dim_; ++i) rho.at(i, i) = p;
  return rho;
}

DensityMatrix DensityMatrix::uniform(int qubits) {
  DensityMatrix rho(qubits);
  const double v = 1.0 / static_cast<double>(rho.dim_);
  for (Complex& x : rho.a_) x = v;
  return rho;
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::uint64_t i = 0; i < dim_; ++i) t += at(i, i).real();
  return t;
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum_ij rho_ij rho_ji = sum_ij |rho_ij|^2 for Hermitian rho.
  double s = 0.0;
  for (const Complex& x : a_) s += std::norm(x);
  return s;
}

double DensityMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::uint64_t i = 0; i < dim_; ++i) {
    for (std::uint64_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    }
  }
  return worst;
}

double DensityMatrix::probability_of(std::uint64_t i) const {
  if (i >= dim_) throw std::invalid_argument("basis index out of range");
  return at(i, i).real();
}

double DensityMatrix::max_abs_diff(const DensityMatrix& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    worst = std::max(worst, std::abs(a_[i] - other.a_[i]));
  }
  return worst;
}

void DensityMatrix::apply_oracle(std::uint64_t target) {
  if (target >= dim_) throw std::invalid_argument("marked index out of range");
  // Conjugation by 2|t><t| - I flips the sign of row t and column t; the
  // (t,t) entry is flipped twice and stays put.
  for (std::uint64_t i = 0; i < dim_; ++i) {
    if (i == target) continue;
    at(i, target) = -at(i, target);
    at(target, i) = -at(target, i);
  }
}

void DensityMatrix::apply_diffusion() {
  const std::uint64_t d = dim_;
  const double a = 2.0 / static_cast<double>(d);
  std::vector<Complex> row_sum(d), col_sum(d);
  Complex total{};
  for (std::uint64_t i = 0; i < d; ++i) {
    for (std::uint64_t j = 0; j < d; ++j) {
      const Complex v = at(i, j);
      row_sum[i] += v;
      col_sum[j] += v;
    }
    total += row_sum[i];
  }
  // (aJ - I) rho (aJ - I) = a^2 S J - a (J rho + rho J) + rho, one pass.
  const Complex a2s = a * a * total;
  for (std::uint64_t i = 0; i < d; ++i) {
    const Complex ri = a * row_sum[i];
    for (std::uint64_t j = 0; j < d; ++j) {
      at(i, j) += a2s - ri - a * col_sum[j];
    }
  }
}

void DensityMatrix::apply_grover(const GroverInstance& inst) {
  if (inst.n != n_) throw std::invalid_argument("instance size mismatch");
  apply_oracle(inst.target);
  apply_diffusion();
}

void DensityMatrix::apply_total_depolarizing(double gamma) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("mixing width must be in [0, 1]");
  }
  const double keep = 1.0 - gamma;
  for (Complex& x : a_) x *= keep;
  const double floor = gamma / static_cast<double>(dim_);
  for (std::uint64_t i = 0; i < dim_; ++i) at(i, i) += floor;
}

void DensityMatrix::apply_local_depolarizing(int qubit, double alpha) {
  if (qubit < 0 || qubit >= n_) throw std::invalid_argument("qubit index out of range");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("depolarizing width must be in [0, 1]");
  }
  const std::uint64_t m = std::uint64_t{1} << qubit;
  // Summing the four Pauli terms entrywise: where the qubit's bit agrees
  // on both indices the entry mixes with its double-flip partner, where it
  // disagrees the entry is simply damped.
  const double keep = 1.0 - alpha / 2.0;
  const double swap = alpha / 2.0;
  const double damp = 1.0 - alpha;
  for (std::uint64_t i = 0; i < dim_; ++i) {
    const bool bi = (i & m) != 0;
    for (std::uint64_t j = 0; j < dim_; ++j) {
      const bool bj = (j & m) != 0;
      if (bi != bj) {
        at(i, j) *= damp;
      } else if (!bi) {  // handle each {(i,j), (i^m, j^m)} pair once
        Complex& x = at(i, j);
        Complex& y = at(i | m, j | m);
        const Complex nx = keep * x + swap * y;
        const Complex ny = keep * y + swap * x;
        x = nx;
        y = ny;
      }
    }
  }
}

void DensityMatrix::apply_local_depolarizing_all(double alpha) {
  for (int q = 0; q < n_; ++q) apply_local_depolarizing(q, alpha);
}

void DensityMatrix::accumulate_outer(const std::vector<Complex>& psi, double w) {
  if (psi.size() != dim_) throw std::invalid_argument("state length mismatch");
  for (std::uint64_t i = 0; i < dim_; ++i) {
    const Complex wi = w * psi[i];
    for (std::uint64_t j = 0; j < dim_; ++j) {
      at(i, j) += wi * std::conj(psi[j]);
    }
  }
}

DensityMatrix with_oracle(DensityMatrix rho, std::uint64_t target) {
  rho.apply_oracle(target);
  return rho;
}

DensityMatrix with_diffusion(DensityMatrix rho) {
  rho.apply_diffusion();
  return rho;
}

DensityMatrix with_grover(DensityMatrix rho, const GroverInstance& inst) {
  rho.apply_grover(inst);
  return rho;
}

DensityMatrix with_total_depolarizing(DensityMatrix rho, double gamma) {
  rho.apply_total_depolarizing(gamma);
  return rho;
}

DensityMatrix with_local_depolarizing(DensityMatrix rho, int qubit, double alpha) {
  rho.apply_local_depolarizing(qubit, alpha);
  return rho;
}

}  // namespace grodep
