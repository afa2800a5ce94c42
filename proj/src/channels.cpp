#include "grodep/channels.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "grodep/errors.hpp"

namespace grodep {

NoiseSpec::NoiseSpec(Model m, double w) : model(m), width(w) {
  if (!(w >= 0.0 && w <= 1.0)) {
    throw std::invalid_argument("noise width must be in [0, 1]");
  }
}

void apply_noisy_step(DensityMatrix& rho, const GroverInstance& inst, const NoiseSpec& noise) {
  rho.apply_grover(inst);
  if (noise.model == Model::tdch) {
    rho.apply_total_depolarizing(noise.width);
  } else {
    rho.apply_local_depolarizing_all(noise.width);
  }
}

ProbabilityCurve evolve(const GroverInstance& inst, const NoiseSpec& noise, long steps,
                        const SimCapacity& cap) {
  if (steps < 0) throw std::invalid_argument("step count must be nonnegative");
  cap.check(noise.model, inst.n);

  ProbabilityCurve curve;
  curve.meta.n = inst.n;
  curve.meta.target = inst.target;
  curve.meta.model = noise.model;
  curve.meta.width = noise.width;
  curve.meta.stop_step = steps;
  {
    char label[48];
    std::snprintf(label, sizeof label, "%s=%g",
                  noise.model == Model::tdch ? "gamma" : "alpha", noise.width);
    curve.meta.label = label;
  }

  DensityMatrix rho = DensityMatrix::uniform(inst.n);
  curve.points.reserve(static_cast<std::size_t>(steps) + 1);
  curve.points.push_back({0, rho.probability_of(inst.target), CurveSource::simulated});
  for (long k = 1; k <= steps; ++k) {
    apply_noisy_step(rho, inst, noise);
    curve.points.push_back({k, rho.probability_of(inst.target), CurveSource::simulated});
  }
  return curve;
}

KrausLabel KrausLabel::from_index(int n, std::uint64_t idx) {
  KrausLabel label;
  label.letters.resize(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) {
    label.letters[static_cast<std::size_t>(q)] =
        static_cast<std::uint8_t>((idx >> (2 * q)) & 3u);
  }
  return label;
}

int KrausLabel::identity_count() const {
  int c = 0;
  for (std::uint8_t l : letters) c += (l == 0);
  return c;
}

double KrausLabel::weight(double alpha) const {
  const int ids = identity_count();
  const int errs = static_cast<int>(letters.size()) - ids;
  return std::pow(1.0 - 0.75 * alpha, ids) * std::pow(alpha / 4.0, errs);
}

void apply_pauli_word(const KrausLabel& label, std::vector<Complex>& v) {
  const int n = static_cast<int>(label.letters.size());
  if (v.size() != (std::uint64_t{1} << n)) throw std::invalid_argument("dimension mismatch");
  const Complex im{0.0, 1.0};
  for (int q = 0; q < n; ++q) {
    const std::uint64_t m = std::uint64_t{1} << q;
    switch (label.letters[static_cast<std::size_t>(q)]) {
      case 0:
        break;
      case 1:  // X: swap the bit-q pair
        for (std::uint64_t i = 0; i < v.size(); ++i) {
          if ((i & m) == 0) std::swap(v[i], v[i | m]);
        }
        break;
      case 2:  // Y: |b> -> i(-1)^b |1-b>
        for (std::uint64_t i = 0; i < v.size(); ++i) {
          if ((i & m) == 0) {
            const Complex lo = v[i];
            v[i] = -im * v[i | m];
            v[i | m] = im * lo;
          }
        }
        break;
      case 3:  // Z
        for (std::uint64_t i = 0; i < v.size(); ++i) {
          if (i & m) v[i] = -v[i];
        }
        break;
      default:
        throw std::invalid_argument("Pauli letter must be 0..3");
    }
  }
}

DensityMatrix enumerate_kraus_paths(const GroverInstance& inst, double alpha, long k) {
  if (k < 0) throw std::invalid_argument("step count must be nonnegative");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("depolarizing width must be in [0, 1]");
  }
  const long letters_total = static_cast<long>(inst.n) * k;
  if (letters_total > 8) {
    throw CapacityError("Kraus path enumeration covers 4^(n*k) histories; n*k must be <= 8");
  }

  DensityMatrix rho(inst.n);
  const std::uint64_t paths = std::uint64_t{1} << (2 * letters_total);
  std::vector<Complex> psi;
  for (std::uint64_t path = 0; path < paths; ++path) {
    psi = uniform_state(inst);
    double weight = 1.0;
    for (long step = 0; step < k; ++step) {
      const std::uint64_t step_bits = (path >> (2 * inst.n * step));
      const KrausLabel label = KrausLabel::from_index(inst.n, step_bits);
      grover_step_inplace(inst, psi);
      apply_pauli_word(label, psi);
      weight *= label.weight(alpha);
    }
    rho.accumulate_outer(psi, weight);
  }
  return rho;
}

}  // namespace grodep
