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
#include "superrep/errors.hpp"
#include "superrep/metrology.hpp"
#include "superrep/oracle.hpp"

using namespace superrep;

namespace {

// Expands a symmetric state into a dense register, for cross-checks against
// the brute-force protocol simulation.
DenseState expand(const SymmetricState& state) {
  DenseState dense;
  dense.qubit_count = state.m;
  dense.amplitudes.resize(std::uint64_t{1} << state.m);
  for (std::uint64_t s = 0; s < dense.amplitudes.size(); ++s) {
    dense.amplitudes[s] = state.sector_amplitudes[std::popcount(s)];
  }
  return dense;
}

}  // namespace

TEST_CASE("standard probe states are normalized sector by sector") {
  for (int m : {1, 2, 7, 16, 100, 513}) {
    for (const SymmetricState& state :
         {plus_state(m), ghz_state(m), single_sector_state(m, m / 2)}) {
      CHECK_NOTHROW(state.validate());
      const std::vector<double> weights = sector_weights(state);
      CompensatedSum total;
      for (double w : weights) {
        total.add(w);
      }
      CHECK(std::abs(total.value() - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("plus state weights are the fair-coin binomials") {
  const SymmetricState state = plus_state(20);
  const std::vector<double> weights = sector_weights(state);
  for (int k = 0; k <= 20; ++k) {
    CHECK(std::abs(weights[k] - testoracle::exact_binomial_weight(20, k)) < 1e-14);
  }
}

TEST_CASE("ghz splits its weight across the extreme sectors") {
  const SymmetricState state = ghz_state(12);
  const std::vector<double> weights = sector_weights(state);
  // sqrt(1/2) squared lands one ulp above 1/2; allow exactly that much.
  CHECK(std::abs(weights[0] - 0.5) <= 2e-16);
  CHECK(std::abs(weights[12] - 0.5) <= 2e-16);
  for (int k = 1; k < 12; ++k) {
    CHECK(weights[k] == 0.0);
  }
}

TEST_CASE("uniform_bulk_state spreads evenly over the window") {
  const ReplicationConfig config = plan_replication(16, 1.0, 0.6);
  const SymmetricState state = uniform_bulk_state(config);
  CHECK_NOTHROW(state.validate());
  std::complex<double> bulk_amp = 0.0;
  for (int k = 0; k <= 16; ++k) {
    if (config.is_bulk(k)) {
      if (bulk_amp == 0.0) {
        bulk_amp = state.sector_amplitudes[k];
      }
      CHECK(state.sector_amplitudes[k] == bulk_amp);
      CHECK(state.sector_amplitudes[k].real() > 0.0);
    } else {
      CHECK(state.sector_amplitudes[k] == std::complex<double>(0.0, 0.0));
    }
  }

  ReplicationConfig empty = config;
  empty.k_minus = 7.3;
  empty.k_plus = 7.6;
  CHECK_THROWS_AS(uniform_bulk_state(empty), std::domain_error);
}

TEST_CASE("scale and argument guards") {
  CHECK_THROWS_AS(plus_state(0), std::domain_error);
  CHECK_THROWS_AS(plus_state(2001), UnsupportedScaleError);
  CHECK_THROWS_AS(single_sector_state(4, 5), std::domain_error);
  SymmetricState bogus;
  bogus.m = 3;
  bogus.sector_amplitudes.assign(4, 0.5);  // far from normalized
  CHECK_THROWS_AS(qfi(bogus), std::domain_error);
  bogus.sector_amplitudes.assign(3, 0.5);  // wrong length
  CHECK_THROWS_AS(qfi(bogus), std::invalid_argument);
}

TEST_CASE("qfi hits the product and entangled benchmarks") {
  for (int m : {1, 2, 4, 8, 16, 64, 256, 1024}) {
    CHECK(std::abs(qfi(plus_state(m)) - m) <= 1e-10 * std::max(1, m));
  }
  for (int m : {2, 4, 8, 16, 100, 1000}) {
    const double expected = static_cast<double>(m) * m;
    CHECK(std::abs(qfi(ghz_state(m)) - expected) <= 1e-10 * expected);
  }
  CHECK(std::abs(qfi(single_sector_state(24, 7))) <= 1e-12);
}

TEST_CASE("qfi matches a direct two-moment evaluation on random states") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 40);
    SymmetricState state;
    state.m = m;
    state.sector_amplitudes.resize(m + 1);
    std::vector<double> weights(m + 1);
    double total = 0.0;
    for (int k = 0; k <= m; ++k) {
      const std::complex<double> g = testoracle::random_unit_complex(rng);
      weights[k] = std::norm(g);
      total += weights[k];
    }
    double mean = 0.0;
    double second = 0.0;
    for (int k = 0; k <= m; ++k) {
      weights[k] /= total;
      mean += weights[k] * k;
      second += weights[k] * k * k;
      // Amplitude with the right weight: sqrt(w / C(m, k)), random phase.
      const double magnitude =
          std::exp(0.5 * (std::log(weights[k]) - testoracle::exact_log_binomial(m, k)));
      state.sector_amplitudes[k] =
          std::polar(magnitude, 2.0 * std::numbers::pi * testoracle::uniform01(rng));
    }
    CHECK(std::abs(qfi(state) - 4.0 * (second - mean * mean)) < 1e-9 * (1 + m * m));
  }
}

TEST_CASE("plus-state fidelity equals process fidelity") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 2 + static_cast<int>(rng() % 400);
    const double alpha = 0.3 + 1.2 * testoracle::uniform01(rng);
    const double beta = 0.55 + 0.4 * testoracle::uniform01(rng);
    const ReplicationConfig config = plan_replication(m, alpha, beta);
    const GammaPolicy policy =
        trial % 2 == 0 ? GammaPolicy::Zero : GammaPolicy::Random;
    const SectorPhaseMap map = build_sector_map(config, policy, rng());
    const double theta = 2.0 * std::numbers::pi * testoracle::uniform01(rng);
    const double via_state =
        state_fidelity_under_protocol(plus_state(m), map, theta);
    const double via_process = process_fidelity(map, theta);
    CHECK(std::abs(via_state - via_process) <= 1e-12);
  }
}

TEST_CASE("ghz through a window that drops both end sectors oscillates") {
  // Window (0.851, 3.149): sectors 0 and 4 sit outside, so the state picks up
  // only the relative phase m * theta between its two branches.
  const ReplicationConfig config = plan_replication(4, 0.5, 0.6);
  REQUIRE_FALSE(config.is_bulk(0));
  REQUIRE_FALSE(config.is_bulk(4));
  const SectorPhaseMap map = build_sector_map(config, GammaPolicy::Zero, 0);
  const SymmetricState ghz = ghz_state(4);
  for (int i = 0; i < 48; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / 48.0;
    const double expected = std::cos(2.0 * theta) * std::cos(2.0 * theta);
    CHECK(std::abs(state_fidelity_under_protocol(ghz, map, theta) - expected) <
          1e-12);
  }
}

TEST_CASE("bulk-supported states ride through with fidelity one") {
  const ReplicationConfig config = plan_replication(64, 1.0, 0.6);
  const SymmetricState state = uniform_bulk_state(config);
  const SectorPhaseMap map = build_sector_map(config, GammaPolicy::Random, 77);
  for (double theta : {0.0, 0.9, 2.8, 5.1}) {
    CHECK(std::abs(state_fidelity_under_protocol(state, map, theta) - 1.0) <=
          1e-12);
  }
}

TEST_CASE("symmetric fidelity agrees with the dense simulation") {
  const ReplicationConfig config = plan_for_budget(5, 3);
  for (GammaPolicy policy : {GammaPolicy::Zero, GammaPolicy::Random}) {
    const std::uint64_t seed = 21;
    const SectorPhaseMap map = build_sector_map(config, policy, seed);
    for (const SymmetricState& state :
         {plus_state(5), ghz_state(5), uniform_bulk_state(config)}) {
      const DenseState dense = expand(state);
      for (double theta : {0.4, 1.8, 3.3}) {
        const DenseState out =
            apply_protocol_statevector(config, policy, seed, dense, theta);
        DenseState ideal = dense;
        for (std::uint64_t s = 0; s < ideal.amplitudes.size(); ++s) {
          ideal.amplitudes[s] *= std::polar(1.0, -theta * std::popcount(s));
        }
        const double dense_fidelity = std::norm(inner_product(ideal, out));
        const double closed = state_fidelity_under_protocol(state, map, theta);
        CHECK(std::abs(dense_fidelity - closed) < 1e-12);
      }
    }
  }
}

TEST_CASE("state_fidelity_under_protocol rejects mismatched sizes") {
  const ReplicationConfig config = plan_replication(6, 1.0, 0.6);
  const SectorPhaseMap map = build_sector_map(config, GammaPolicy::Zero, 0);
  CHECK_THROWS_AS(state_fidelity_under_protocol(plus_state(5), map, 0.1),
                  std::invalid_argument);
}

TEST_CASE("precision_resource_table balances the two strategies") {
  const PrecisionResourceTable table = precision_resource_table(16, 1.0, 0.6);
  CHECK(table.n_uses == 16);
  CHECK(table.product_copies == 256);
  CHECK(table.qudit_levels == 16);
  CHECK(std::abs(table.product_qfi - 256.0) < 1e-9);
  CHECK(std::abs(table.ghz_qfi - 256.0) < 1e-9);
  // Equal information from n entangled uses and n^2 replicated product probes.
  CHECK(std::abs(table.product_qfi - table.ghz_qfi) < 1e-9);
  CHECK(table.uses_for_product_copies == 56);  // plan for 256 copies
  CHECK(table.shot_noise_scaling == "O(1/sqrt(n))");
  CHECK(table.heisenberg_scaling == "O(1/n)");

  for (int n : {2, 5, 9, 20, 44}) {
    const PrecisionResourceTable t = precision_resource_table(n, 1.0, 0.6);
    CHECK(std::abs(t.product_qfi - t.ghz_qfi) < 1e-8 * t.ghz_qfi);
  }
  CHECK_THROWS_AS(precision_resource_table(1, 1.0, 0.6), std::domain_error);
  CHECK_THROWS_AS(precision_resource_table(45, 1.0, 0.6), UnsupportedScaleError);
}
