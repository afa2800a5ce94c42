#include <cstdlib>
#include <stdexcept>

#include "doctest.h"
#include "support.hpp"

#include "grodep/channels.hpp"
#include "grodep/errors.hpp"

using namespace grodep;
namespace ts = testsupport;

TEST_SUITE("channel-sim") {

TEST_CASE("density matrix constructors") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
  CHECK(mixed.trace_real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(mixed.purity() == doctest::Approx(1.0 / 8.0).epsilon(1e-14));

  const DensityMatrix uni = DensityMatrix::uniform(3);
  CHECK(uni.trace_real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(uni.purity() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(uni.probability_of(5) == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
  CHECK(uni.hermiticity_defect() < 1e-15);
}

TEST_CASE("oracle and diffusion conjugations match dense oracles") {
  auto rng = ts::make_rng(7);
  const GroverInstance inst(3, 5);
  const DensityMatrix rho = ts::random_density(3, rng);

  const ComplexMatrix dense = ts::to_matrix(rho);
  ComplexMatrix oracle(8);
  for (std::uint64_t i = 0; i < 8; ++i) oracle.at(i, i) = (i == 5) ? 1.0 : -1.0;
  CHECK(ts::max_abs_diff(ts::to_matrix(with_oracle(rho, 5)),
                         ts::conjugate_by(oracle, dense)) < 1e-13);

  ComplexMatrix diffusion(8);
  for (std::uint64_t i = 0; i < 8; ++i) {
    for (std::uint64_t j = 0; j < 8; ++j) diffusion.at(i, j) = 0.25 - (i == j ? 1.0 : 0.0);
  }
  CHECK(ts::max_abs_diff(ts::to_matrix(with_diffusion(rho)),
                         ts::conjugate_by(diffusion, dense)) < 1e-13);

  CHECK(ts::max_abs_diff(ts::to_matrix(with_grover(rho, inst)),
                         ts::conjugate_by(ts::dense_grover(inst), dense)) < 1e-13);
}

TEST_CASE("total depolarizing basics") {
  auto rng = ts::make_rng(11);
  DensityMatrix rho = ts::random_density(3, rng);
  const DensityMatrix before = rho;

  rho.apply_total_depolarizing(0.3);
  CHECK(rho.trace_real() == doctest::Approx(1.0).epsilon(1e-13));
  // entrywise: (1-g) rho + g I/8
  for (std::uint64_t i = 0; i < 8; ++i) {
    for (std::uint64_t j = 0; j < 8; ++j) {
      const Complex expect = 0.7 * before.at(i, j) + (i == j ? 0.3 / 8.0 : 0.0);
      CHECK(std::abs(rho.at(i, j) - expect) < 1e-14);
    }
  }

  DensityMatrix fixed = DensityMatrix::maximally_mixed(3);
  fixed.apply_total_depolarizing(0.9);
  CHECK(fixed.max_abs_diff(DensityMatrix::maximally_mixed(3)) < 1e-15);

  CHECK_THROWS_AS(rho.apply_total_depolarizing(-0.1), std::invalid_argument);
  CHECK_THROWS_AS(rho.apply_total_depolarizing(1.5), std::invalid_argument);
}

TEST_CASE("total depolarizing commutes with the unitary step") {
  auto rng = ts::make_rng(13);
  const GroverInstance inst(4, 9);
  const DensityMatrix rho = ts::random_density(4, rng);
  const DensityMatrix noise_last = with_total_depolarizing(with_grover(rho, inst), 0.25);
  const DensityMatrix noise_first = with_grover(with_total_depolarizing(rho, 0.25), inst);
  CHECK(noise_last.max_abs_diff(noise_first) < 1e-13);
}

TEST_CASE("local depolarizing matches the dense Kraus sum on every qubit") {
  auto rng = ts::make_rng(17);
  const DensityMatrix rho = ts::random_density(3, rng);
  for (int q = 0; q < 3; ++q) {
    const ComplexMatrix expect = ts::dense_local_channel(3, q, 0.37, ts::to_matrix(rho));
    const DensityMatrix got = with_local_depolarizing(rho, q, 0.37);
    CHECK(ts::max_abs_diff(ts::to_matrix(got), expect) < 1e-13);
  }
  DensityMatrix bad = rho;
  CHECK_THROWS_AS(bad.apply_local_depolarizing(3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(bad.apply_local_depolarizing(0, 1.2), std::invalid_argument);
}

TEST_CASE("per-qubit channels commute, so order is irrelevant") {
  auto rng = ts::make_rng(19);
  const DensityMatrix rho = ts::random_density(3, rng);
  DensityMatrix forward = rho;
  for (int q : {0, 1, 2}) forward.apply_local_depolarizing(q, 0.42);
  DensityMatrix shuffled = rho;
  for (int q : {2, 0, 1}) shuffled.apply_local_depolarizing(q, 0.42);
  CHECK(forward.max_abs_diff(shuffled) < 1e-13);
}

TEST_CASE("full-width local noise on a product state mixes completely") {
  DensityMatrix rho = DensityMatrix::uniform(3);
  rho.apply_local_depolarizing_all(1.0);
  CHECK(rho.max_abs_diff(DensityMatrix::maximally_mixed(3)) < 1e-14);

  DensityMatrix same = DensityMatrix::uniform(3);
  same.apply_local_depolarizing_all(0.0);
  CHECK(same.max_abs_diff(DensityMatrix::uniform(3)) < 1e-15);
}

TEST_CASE("noisy evolution preserves trace, hermiticity, positivity") {
  for (const NoiseSpec noise : {NoiseSpec(Model::tdch, 0.3), NoiseSpec(Model::ldch, 0.3)}) {
    const GroverInstance inst(3, 2);
    DensityMatrix rho = DensityMatrix::uniform(3);
    for (int step = 0; step < 5; ++step) apply_noisy_step(rho, inst, noise);
    CHECK(std::abs(rho.trace_real() - 1.0) < 1e-12);
    CHECK(rho.hermiticity_defect() < 1e-12);
    CHECK(ts::min_eigenvalue_hermitian(ts::to_matrix(rho)) > -1e-10);
    CHECK(rho.purity() <= 1.0 + 1e-12);
  }
}

TEST_CASE("evolve records the marked probability per step") {
  const GroverInstance inst(4, 7);
  const NoiseSpec noise(Model::ldch, 0.2);
  const ProbabilityCurve curve = evolve(inst, noise, 5);
  CHECK(curve.points.size() == 6);
  CHECK(curve.points[0].k == 0);
  CHECK(curve.points[0].probability == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
  CHECK(curve.meta.label == "alpha=0.2");

  DensityMatrix rho = DensityMatrix::uniform(4);
  for (long k = 1; k <= 5; ++k) {
    apply_noisy_step(rho, inst, noise);
    CHECK(std::abs(curve.points[static_cast<std::size_t>(k)].probability -
                   rho.probability_of(7)) < 1e-15);
  }
}

TEST_CASE("evolve enforces the capacity gate and the env override") {
  ::unsetenv("GROVER_SIM_MAX_QUBITS");
  CHECK_THROWS_AS(evolve(GroverInstance(13, 0), NoiseSpec(Model::ldch, 0.1), 1),
                  CapacityError);
  CHECK_NOTHROW(evolve(GroverInstance(6, 0), NoiseSpec(Model::ldch, 0.1), 1));

  ::setenv("GROVER_SIM_MAX_QUBITS", "5", 1);
  const SimCapacity tightened = SimCapacity::resolve();
  CHECK(tightened.tdch == 5);
  CHECK(tightened.ldch == 5);
  CHECK_THROWS_AS(evolve(GroverInstance(6, 0), NoiseSpec(Model::tdch, 0.1), 1, tightened),
                  CapacityError);

  ::setenv("GROVER_SIM_MAX_QUBITS", "banana", 1);
  CHECK_THROWS_AS(SimCapacity::resolve(), ConfigError);
  ::setenv("GROVER_SIM_MAX_QUBITS", "", 1);
  CHECK(SimCapacity::resolve().ldch == 12);  // empty means unset
  ::unsetenv("GROVER_SIM_MAX_QUBITS");
  const SimCapacity defaults = SimCapacity::resolve();
  CHECK(defaults.tdch == 14);
  CHECK(defaults.ldch == 12);
}

TEST_CASE("noise spec validation") {
  CHECK_THROWS_AS(NoiseSpec(Model::tdch, -0.01), std::invalid_argument);
  CHECK_THROWS_AS(NoiseSpec(Model::ldch, 1.01), std::invalid_argument);
  CHECK_NOTHROW(NoiseSpec(Model::ldch, 0.0));
  CHECK_NOTHROW(NoiseSpec(Model::tdch, 1.0));
}

TEST_CASE("kraus labels decode, count, and weigh correctly") {
  const KrausLabel label = KrausLabel::from_index(3, 0b110010);  // q0=Y, q1=I, q2=Z
  REQUIRE(label.letters.size() == 3);
  CHECK(label.letters[0] == 2);
  CHECK(label.letters[1] == 0);
  CHECK(label.letters[2] == 3);
  CHECK(label.identity_count() == 1);
  const double a = 0.3;
  CHECK(label.weight(a) == doctest::Approx((1 - 0.75 * a) * (a / 4) * (a / 4)).epsilon(1e-14));

  // weights over all labels form a distribution
  double total = 0.0;
  for (std::uint64_t idx = 0; idx < 64; ++idx) total += KrausLabel::from_index(3, idx).weight(a);
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pauli words act like the dense Kronecker operators") {
  auto rng = ts::make_rng(23);
  const std::vector<Complex> v = ts::random_state(3, rng);
  for (std::uint64_t idx : {1ull, 2ull, 3ull, 0b100100ull, 0b011011ull, 63ull}) {
    const KrausLabel label = KrausLabel::from_index(3, idx);
    ComplexMatrix word = ComplexMatrix::identity(8);
    for (int q = 0; q < 3; ++q) {
      if (label.letters[static_cast<std::size_t>(q)] == 0) continue;
      word = multiply(ts::op_on_qubit(3, q, ts::pauli(label.letters[static_cast<std::size_t>(q)])),
                      word);
    }
    std::vector<Complex> got = v;
    apply_pauli_word(label, got);
    CHECK(ts::max_abs_diff(got, apply(word, v)) < 1e-13);
  }
}

TEST_CASE("kraus path enumeration reproduces the sequential channel") {
  const GroverInstance inst(2, 1);
  for (double alpha : {0.0, 0.4, 1.0}) {
    for (long k : {1L, 2L}) {
      const DensityMatrix summed = enumerate_kraus_paths(inst, alpha, k);
      const ProbabilityCurve curve = evolve(inst, NoiseSpec(Model::ldch, alpha), k);
      DensityMatrix sequential = DensityMatrix::uniform(2);
      for (long s = 0; s < k; ++s) {
        apply_noisy_step(sequential, inst, NoiseSpec(Model::ldch, alpha));
      }
      CHECK(summed.max_abs_diff(sequential) < 1e-12);
      CHECK(std::abs(summed.probability_of(1) -
                     curve.points[static_cast<std::size_t>(k)].probability) < 1e-12);
    }
  }
}

TEST_CASE("kraus path enumeration enforces its budget") {
  CHECK_THROWS_AS(enumerate_kraus_paths(GroverInstance(3, 0), 0.1, 3), CapacityError);
  CHECK_NOTHROW(enumerate_kraus_paths(GroverInstance(4, 0), 0.1, 2));
  CHECK_THROWS_AS(enumerate_kraus_paths(GroverInstance(2, 0), -0.1, 1), std::invalid_argument);
}

}  // TEST_SUITE
