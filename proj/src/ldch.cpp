#include "grodep/ldch.hpp"

#include <cmath>
#include <stdexcept>

#include "grodep/tdch.hpp"

namespace grodep {

namespace {

void check_width(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("depolarizing width must be in [0, 1]");
  }
}

}  // namespace

double p1_exact(const GroverInstance& inst, double alpha) {
  check_width(alpha);
  const int n = inst.n;
  const double c = std::pow(1.0 - alpha / 2.0, n);
  // 2^{4-3n} [ 2^n (2^{n-1}-1) c + (2^n-4)^2/16 ], regrouped so neither
  // factor under- or overflows for large n.
  const double coherent = std::ldexp(1.0 - std::ldexp(1.0, 1 - n), 3 - n) * c;
  const double tail = 1.0 - std::ldexp(1.0, 2 - n);
  return coherent + std::ldexp(tail * tail, -n);
}

double p1_large_n(const GroverInstance& inst, double alpha) {
  check_width(alpha);
  const double c = std::pow(1.0 - alpha / 2.0, inst.n);
  return std::ldexp(8.0 * c + 1.0, -inst.n);
}

double gamma_lower_equivalent(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  check_width(alpha);
  if (alpha == 1.0) return 1.0;
  return -std::expm1(static_cast<double>(n) * std::log1p(-alpha));
}

double gamma_upper_equivalent(int n, double alpha, UpperBound kind) {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  check_width(alpha);
  if (kind == UpperBound::power) return std::pow(alpha, n);
  const double na = static_cast<double>(n) * alpha;
  return na / (2.0 + na);
}

BoundPair probability_bounds(const GroverInstance& inst, long k, double alpha,
                             UpperBound kind) {
  BoundPair b;
  b.lower = p_hat_tdch(inst, k, gamma_lower_equivalent(inst.n, alpha));
  b.upper = p_hat_tdch(inst, k, gamma_upper_equivalent(inst.n, alpha, kind));
  return b;
}

namespace subspace {

Operators Operators::make(int n) {
  if (n < 2) throw std::invalid_argument("subspace engine requires n >= 2");
  Operators ops;
  const double lam = std::ldexp(1.0, 1) / std::sqrt(std::ldexp(1.0, n));
  const double l2 = lam * lam;
  const double r2 = std::sqrt(2.0);
  ops.lambda = lam;
  // Columns are images of the basis {|t>, |s>, |x_t>, |even>}; the basis
  // is not orthogonal, which is fine: only coefficient algebra happens
  // here, overlaps enter through the readout row.
  ops.grover = {{{-1.0, -lam, 0.0, -r2 * lam},
                 {lam, l2 - 1.0, -lam, r2 * (l2 - 1.0)},
                 {0.0, 0.0, 1.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0}}};
  ops.pauli_x = {{{0.0, 0.0, 1.0, 0.0},
                  {0.0, 1.0, 0.0, r2},
                  {1.0, 0.0, 0.0, 0.0},
                  {0.0, 0.0, 0.0, -1.0}}};
  // Y modulo a global factor i; the engine only ever squares readouts.
  ops.pauli_y = {{{0.0, 0.0, -1.0, 0.0},
                  {0.0, 1.0, 0.0, r2},
                  {1.0, 0.0, 0.0, 0.0},
                  {0.0, -r2, 0.0, -1.0}}};
  // Z|s> = -|s> + sqrt(2)|even>: the even-component coefficient is +sqrt(2).
  ops.pauli_z = {{{1.0, 0.0, 0.0, 0.0},
                  {0.0, -1.0, 0.0, 0.0},
                  {0.0, 0.0, -1.0, 0.0},
                  {0.0, r2, 0.0, 1.0}}};
  ops.readout = {1.0, lam / 2.0, 0.0, lam / r2};
  return ops;
}

Vec apply(const Mat& m, const Vec& v) {
  Vec out{};
  for (int i = 0; i < 4; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 4; ++j) acc += m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

double dot(const Vec& x, const Vec& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] + x[3] * y[3];
}

std::vector<Complex> embed(const Vec& c, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  const double inv_root = 1.0 / std::sqrt(static_cast<double>(dim));
  const double even_amp = std::sqrt(2.0 / static_cast<double>(dim));
  std::vector<Complex> v(dim, Complex{c[1] * inv_root, 0.0});
  v[0] += c[0];
  v[1] += c[2];
  for (std::uint64_t i = 0; i < dim; i += 2) v[i] += c[3] * even_amp;
  return v;
}

}  // namespace subspace

double f1(const GroverInstance& inst, long k) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  if (k == 0) return 0.0;
  const auto ops = subspace::Operators::make(inst.n);

  // prefix[l] = A^l applied to the uniform start, l = 1..k
  std::vector<subspace::Vec> prefix(static_cast<std::size_t>(k) + 1);
  prefix[0] = {0.0, 1.0, 0.0, 0.0};
  for (long l = 1; l <= k; ++l) {
    prefix[static_cast<std::size_t>(l)] =
        subspace::apply(ops.grover, prefix[static_cast<std::size_t>(l - 1)]);
  }
  // suffix[m] = readout row times A^m, built by iterating the transpose
  std::vector<subspace::Vec> suffix(static_cast<std::size_t>(k));
  suffix[0] = ops.readout;
  for (long m = 1; m < k; ++m) {
    const subspace::Vec& prev = suffix[static_cast<std::size_t>(m - 1)];
    subspace::Vec next{};
    for (int j = 0; j < 4; ++j) {
      double acc = 0.0;
      for (int i = 0; i < 4; ++i) acc += prev[i] * ops.grover[i][j];
      next[j] = acc;
    }
    suffix[static_cast<std::size_t>(m)] = next;
  }

  const subspace::Mat* errors[3] = {&ops.pauli_x, &ops.pauli_y, &ops.pauli_z};
  double total = 0.0;
  for (long l = 1; l <= k; ++l) {
    const subspace::Vec& state = prefix[static_cast<std::size_t>(l)];
    const subspace::Vec& row = suffix[static_cast<std::size_t>(k - l)];
    for (const auto* e : errors) {
      const double amp = subspace::dot(row, subspace::apply(*e, state));
      total += amp * amp;
    }
  }
  return static_cast<double>(inst.n) * total;
}

double first_order_probability(const GroverInstance& inst, long k, double alpha) {
  if (k < 0) throw std::invalid_argument("iteration count must be nonnegative");
  check_width(alpha);
  if (k == 0) return 1.0 / static_cast<double>(inst.dim);
  const double q = 1.0 - 0.75 * alpha;
  const double nk = static_cast<double>(inst.n) * static_cast<double>(k);
  return std::pow(q, nk) * noiseless_probability(inst, k) +
         std::pow(q, nk - 1.0) * (alpha / 4.0) * f1(inst, k);
}

}  // namespace grodep
