// Copyright 2026 The superrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "superrep/emulation.hpp"
#include "superrep/errors.hpp"

using namespace superrep;

namespace {

DenseState random_state(int qubit_count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  DenseState state;
  state.qubit_count = qubit_count;
  state.amplitudes.resize(std::uint64_t{1} << qubit_count);
  for (auto& amp : state.amplitudes) {
    amp = testoracle::random_unit_complex(rng);
  }
  const double norm = std::sqrt(state.squared_norm());
  for (auto& amp : state.amplitudes) {
    amp /= norm;
  }
  return state;
}

}  // namespace

TEST_CASE("ladder spectra are exact integer and scaled ramps") {
  const QuditSpec ladder = ladder_spectrum(5);
  CHECK(ladder.levels == 5);
  CHECK(ladder.eigenvalues == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});

  const QuditSpec compressed = bang_bang_effective_spectrum(5);
  REQUIRE(compressed.levels == 5);
  for (int j = 0; j < 5; ++j) {
    CHECK(compressed.eigenvalues[j] == j / 4.0);
  }
  CHECK(compressed.eigenvalues.back() == 1.0);
  CHECK_THROWS_AS(ladder_spectrum(0), std::domain_error);
  CHECK_THROWS_AS(bang_bang_effective_spectrum(1), std::domain_error);
}

TEST_CASE("min_ancilla_count covers the widest multiplicity class") {
  CHECK(min_ancilla_count(1) == 0);
  CHECK(min_ancilla_count(2) == 1);
  CHECK(min_ancilla_count(3) == 2);
  CHECK(min_ancilla_count(4) == 3);
  CHECK(min_ancilla_count(6) == 5);
  CHECK(min_ancilla_count(8) == 7);
  CHECK(min_ancilla_count(12) == 10);
  for (int n = 1; n <= 30; ++n) {
    const testoracle::BigInt central = testoracle::exact_binomial(n, n / 2);
    int expected = 0;
    while ((testoracle::BigInt(1) << expected) < central) {
      ++expected;
    }
    CHECK(min_ancilla_count(n) == expected);
  }
  CHECK_THROWS_AS(min_ancilla_count(0), std::domain_error);
  CHECK_THROWS_AS(min_ancilla_count(61), UnsupportedScaleError);
}

TEST_CASE("apply_qudit_evolution phases each level slice once") {
  const QuditSpec ladder = ladder_spectrum(3);
  std::vector<std::complex<double>> reg(6, 1.0);  // two slots per level
  int invocations = 0;
  const double theta = 0.9;
  apply_qudit_evolution(ladder, theta, reg, invocations);
  CHECK(invocations == 1);
  for (int j = 0; j < 3; ++j) {
    const std::complex<double> expected = std::polar(1.0, -theta * j);
    CHECK(std::abs(reg[2 * j] - expected) < 1e-15);
    CHECK(std::abs(reg[2 * j + 1] - expected) < 1e-15);
  }
  apply_qudit_evolution(ladder, theta, reg, invocations);
  CHECK(invocations == 2);

  std::vector<std::complex<double>> ragged(5, 1.0);
  CHECK_THROWS_AS(apply_qudit_evolution(ladder, theta, ragged, invocations),
                  std::invalid_argument);
}

TEST_CASE("emulation reproduces the n-fold phase gate exactly") {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed : {0ull, 1ull, 9ull}) {
      const DenseState input = random_state(n, 100 * n + seed);
      for (double theta : {0.0, 0.7, std::numbers::pi, 5.9}) {
        const EmulationResult result = emulate_qubits_from_qudit(n, theta, input);
        CHECK(result.v_invocations == 1);
        double max_deviation = 0.0;
        for (std::uint64_t s = 0; s < input.amplitudes.size(); ++s) {
          const std::complex<double> expected =
              input.amplitudes[s] *
              std::polar(1.0, -theta * std::popcount(s));
          max_deviation = std::max(max_deviation,
                                   std::abs(result.state.amplitudes[s] - expected));
        }
        CHECK(max_deviation <= 1e-12);
      }
    }
  }
}

TEST_CASE("emulation guard rails") {
  CHECK_THROWS_AS(emulate_qubits_from_qudit(0, 1.0, DenseState::basis_state(1, 0)),
                  std::domain_error);
  CHECK_THROWS_AS(emulate_qubits_from_qudit(13, 1.0, DenseState::basis_state(13, 0)),
                  UnsupportedScaleError);
  CHECK_THROWS_AS(emulate_qubits_from_qudit(3, 1.0, DenseState::basis_state(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("single_use_super_replication picks the largest affordable target") {
  struct Frozen {
    int n;
    int m;
    int slack;
  };
  // alpha = 1, beta = 0.6 throughout.
  for (const Frozen& f : {Frozen{3, 1, 1}, Frozen{4, 3, 0}, Frozen{5, 4, 0},
                          Frozen{8, 10, 0}, Frozen{16, 32, 0}, Frozen{32, 101, 0}}) {
    const SingleUseReplicationResult result =
        single_use_super_replication(f.n, 1.0, 0.6, 1.0);
    CHECK(result.config.m == f.m);
    CHECK(result.budget_slack == f.slack);
    CHECK(result.config.n == f.n);
    CHECK(result.theta_effective == 1.0 / f.n);
    CHECK(result.report.theta == result.theta_effective);
  }
}

TEST_CASE("the chosen target is maximal for its budget") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    for (double beta : {0.55, 0.6, 0.9}) {
      for (int n = 2; n <= 2000; n = n * 3 + 1) {
        if (std::ceil(2.0 * alpha) > n) {
          CHECK_THROWS_AS(single_use_super_replication(n, alpha, beta, 0.5),
                          std::domain_error);
          continue;
        }
        const SingleUseReplicationResult result =
            single_use_super_replication(n, alpha, beta, 0.5);
        const int m = result.config.m;
        CHECK(std::ceil(2.0 * alpha * std::pow(m, beta)) <= n);
        CHECK(std::ceil(2.0 * alpha * std::pow(m + 1.0, beta)) > n);
        CHECK(result.budget_slack >= 0);
        CHECK(result.budget_slack ==
              n - static_cast<int>(std::ceil(2.0 * alpha * std::pow(m, beta))));
      }
    }
  }
}

TEST_CASE("single_use_super_replication validates its inputs") {
  CHECK_THROWS_AS(single_use_super_replication(1, 1.0, 0.6, 0.5),
                  std::domain_error);
  CHECK_THROWS_AS(single_use_super_replication(2, 5.0, 0.6, 0.5),
                  std::domain_error);  // even m = 1 costs ceil(10) uses
  CHECK_THROWS_AS(single_use_super_replication(8, 1.0, 0.6, -0.1),
                  std::domain_error);
  CHECK_THROWS_AS(
      single_use_super_replication(8, 1.0, 0.6, 2.0 * std::numbers::pi),
      std::domain_error);
}

TEST_CASE("single-use fidelity report comes from the effective angle") {
  const SingleUseReplicationResult result =
      single_use_super_replication(16, 1.0, 0.6, 1.6, GammaPolicy::Random, 4);
  const SectorPhaseMap map =
      build_sector_map(result.config, GammaPolicy::Random, 4);
  CHECK(result.report.process_fidelity ==
        process_fidelity(map, result.theta_effective));
  // The effective angle shrinks by the level count, the gap of the
  // compressed spectrum.
  CHECK(result.theta_effective == 1.6 / 16.0);
}
