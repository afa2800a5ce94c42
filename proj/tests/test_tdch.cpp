#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support.hpp"

#include "grodep/channels.hpp"
#include "grodep/tdch.hpp"

using namespace grodep;

namespace {

std::vector<double> gamma_grid() {
  // {0} plus a log-spaced sweep across four decades
  std::vector<double> g = {0.0};
  for (int i = 0; i <= 24; ++i) g.push_back(std::pow(10.0, -4.0 + 4.0 * i / 24.0));
  return g;
}

}  // namespace

TEST_SUITE("tdch-analytics") {

TEST_CASE("closed form equals the density-matrix simulation") {
  // the simulator is the oracle: the closed form must track it exactly
  for (double gamma : {0.0, 0.2, 0.9, 1.0}) {
    const GroverInstance inst(4, 11);
    const ProbabilityCurve curve = evolve(inst, NoiseSpec(Model::tdch, gamma), 6);
    for (const CurvePoint& p : curve.points) {
      CHECK(std::abs(p.probability - p_hat_tdch(inst, p.k, gamma)) < 1e-12);
    }
  }
}

TEST_CASE("closed form limits") {
  const GroverInstance inst(10, 0);
  CHECK(p_hat_tdch(inst, 0, 0.7) == doctest::Approx(1.0 / 1024.0).epsilon(1e-14));
  for (long k : {1L, 7L, 25L}) {
    CHECK(p_hat_tdch(inst, k, 0.0) ==
          doctest::Approx(noiseless_probability(inst, k)).epsilon(1e-15));
    CHECK(p_hat_tdch(inst, k, 1.0) == doctest::Approx(1.0 / 1024.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(p_hat_tdch(inst, -1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(p_hat_tdch(inst, 1, 1.1), std::invalid_argument);
}

TEST_CASE("probability decreases with width while k stays useful") {
  const GroverInstance inst(6, 33);
  for (long k = 0; k <= inst.k_grover; ++k) {
    double prev = p_hat_tdch(inst, k, 0.0);
    for (double gamma : {0.01, 0.05, 0.2, 0.6, 1.0}) {
      const double p = p_hat_tdch(inst, k, gamma);
      CHECK(p <= prev + 1e-15);
      CHECK(p >= 1.0 / 64.0 - 1e-15);  // never below the mixed floor
      prev = p;
    }
  }
}

TEST_CASE("derivation geometry at the endpoints") {
  const GroverInstance inst(10, 0);
  const KmaxDerivation at0 = k_max_derivation(inst, 0.0);
  CHECK(at0.delta == 0.0);
  CHECK(at0.f_delta == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(at0.continuous_k ==
        doctest::Approx(std::numbers::pi / (4 * inst.theta) - 0.5).epsilon(1e-13));

  const KmaxDerivation at1 = k_max_derivation(inst, 1.0);
  CHECK(at1.delta == 1.0);
  CHECK(at1.phi == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(at1.z == doctest::Approx(1.0 / 1024.0).epsilon(1e-14));
}

TEST_CASE("continuous maximizer satisfies the stationarity condition") {
  const GroverInstance inst(10, 0);
  for (double gamma : gamma_grid()) {
    if (gamma == 0.0 || gamma >= 1.0) continue;
    const KmaxDerivation d = k_max_derivation(inst, gamma);
    const double resid = 4.0 * inst.theta * std::sin(d.x) * std::cos(d.x) +
                         (std::sin(d.x) * std::sin(d.x) - 1.0 / 1024.0) * std::log1p(-gamma);
    CHECK(std::abs(resid) < 1e-8);
  }
}

TEST_CASE("closed-form optimal stop tracks the exhaustive argmax") {
  for (int n : {6, 8, 10}) {
    const GroverInstance inst(n, 0);
    for (double gamma : gamma_grid()) {
      const long exact = k_max_exact(inst, gamma);
      const long argmax = k_max_grid_search(inst, gamma);
      CHECK(std::abs(exact - argmax) <= 1);
    }
  }
}

TEST_CASE("optimal stop frozen values and monotonicity") {
  const GroverInstance inst(10, 0);
  CHECK(k_max_exact(inst, 0.0) == 25);
  CHECK(k_max_exact(inst, 1.0) == 1);
  CHECK(k_max_exact(inst, 0.999999) == 1);
  CHECK(k_max_grid_search(inst, 0.1) == 13);

  long prev = k_max_exact(inst, 0.0);
  for (double gamma : gamma_grid()) {
    if (gamma == 0.0) continue;
    const long k = k_max_exact(inst, gamma);
    CHECK(k <= prev);
    CHECK(k >= 1);
    prev = k;
  }
}

TEST_CASE("small-width estimate in its regime") {
  const GroverInstance inst(10, 0);
  // pi sqrt(N)/4 - N gamma/8 at gamma = 1/(4 sqrt(N)): 25.13 - 1 -> 24
  CHECK(k_max_small_gamma(inst, 1.0 / 128.0) == 24);
  CHECK(k_max_small_gamma(inst, 0.0) == 25);
  for (double gamma : gamma_grid()) {
    if (gamma > 1.0 / 64.0) continue;  // within ~1/(2 sqrt(N))
    CHECK(std::abs(k_max_small_gamma(inst, gamma) - k_max_grid_search(inst, gamma)) <= 1);
  }
  // far out of regime the estimate still floors at 1
  CHECK(k_max_small_gamma(inst, 1.0) == 1);
}

TEST_CASE("large-width estimate in its regime") {
  CHECK_THROWS_AS(k_max_large_gamma(0.0), std::domain_error);
  CHECK(k_max_large_gamma(1.0) == 1);
  CHECK(k_max_large_gamma(0.9) == 1);

  const GroverInstance inst(10, 0);
  long prev = 1L << 40;
  for (double gamma : gamma_grid()) {
    if (gamma < 0.2) continue;
    const long k = k_max_large_gamma(gamma);
    CHECK(k <= prev);
    prev = k;
    CHECK(std::abs(k - k_max_grid_search(inst, gamma)) <= 1);
  }
}

TEST_CASE("optimal stop never loses to the noiseless stop") {
  for (int n : {4, 6, 8, 10, 12, 14}) {
    const GroverInstance inst(n, 0);
    for (double gamma : gamma_grid()) {
      CHECK(p_hat_tdch(inst, k_max_exact(inst, gamma), gamma) >=
            p_hat_tdch(inst, inst.k_grover, gamma) - 1e-9);
    }
  }
}

}  // TEST_SUITE
