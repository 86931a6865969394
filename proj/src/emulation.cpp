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

#include "superrep/emulation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "superrep/errors.hpp"

namespace superrep {

QuditSpec ladder_spectrum(int levels) {
  if (levels < 1) {
    throw std::domain_error("ladder_spectrum: need at least one level");
  }
  QuditSpec spec;
  spec.levels = levels;
  spec.eigenvalues.resize(levels);
  for (int j = 0; j < levels; ++j) {
    spec.eigenvalues[j] = static_cast<double>(j);
  }
  return spec;
}

QuditSpec bang_bang_effective_spectrum(int levels) {
  if (levels < 2) {
    throw std::domain_error("bang_bang_effective_spectrum: need two levels");
  }
  QuditSpec spec = ladder_spectrum(levels);
  for (double& value : spec.eigenvalues) {
    value /= static_cast<double>(levels - 1);
  }
  return spec;
}

int min_ancilla_count(int n) {
  if (n < 1) {
    throw std::domain_error("min_ancilla_count: need n >= 1");
  }
  if (n > 60) {
    throw UnsupportedScaleError("min_ancilla_count: exact count overflows past n = 60");
  }
  // Central binomial via the integer-exact product recurrence.
  std::uint64_t central = 1;
  const int half = n / 2;
  for (int i = 0; i < half; ++i) {
    central = central * static_cast<std::uint64_t>(n - i) /
              static_cast<std::uint64_t>(i + 1);
  }
  int ancillas = 0;
  while ((std::uint64_t{1} << ancillas) < central) {
    ++ancillas;
  }
  return ancillas;
}

void apply_qudit_evolution(const QuditSpec& spec, double theta,
                           std::vector<std::complex<double>>& register_amplitudes,
                           int& invocation_count) {
  if (spec.levels < 1 || static_cast<int>(spec.eigenvalues.size()) != spec.levels) {
    throw std::invalid_argument("apply_qudit_evolution: malformed spectrum");
  }
  if (register_amplitudes.empty() ||
      register_amplitudes.size() % static_cast<std::size_t>(spec.levels) != 0) {
    throw std::invalid_argument(
        "apply_qudit_evolution: register length must be a multiple of the level count");
  }
  const std::size_t multiplicity = register_amplitudes.size() / spec.levels;
  for (int j = 0; j < spec.levels; ++j) {
    const std::complex<double> phase = std::polar(1.0, -theta * spec.eigenvalues[j]);
    const std::size_t offset = j * multiplicity;
    for (std::size_t r = 0; r < multiplicity; ++r) {
      register_amplitudes[offset + r] *= phase;
    }
  }
  ++invocation_count;
}

EmulationResult emulate_qubits_from_qudit(int n, double theta,
                                          const DenseState& input) {
  if (n < 1) {
    throw std::domain_error("emulate_qubits_from_qudit: need n >= 1");
  }
  if (n > kMaxEmulationQubits) {
    throw UnsupportedScaleError("emulate_qubits_from_qudit: capped at " +
                                std::to_string(kMaxEmulationQubits) + " qubits");
  }
  input.validate();
  if (input.qubit_count != n) {
    throw std::invalid_argument("emulate_qubits_from_qudit: input must have n qubits");
  }

  const int ancillas = min_ancilla_count(n);
  const std::size_t rank_dim = std::size_t{1} << ancillas;
  const QuditSpec ladder = ladder_spectrum(n + 1);

  // Level-major register: slot (k, r) holds the r-th weight-k basis state.
  std::vector<std::complex<double>> qudit_register(
      static_cast<std::size_t>(n + 1) * rank_dim, 0.0);
  const std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<std::uint32_t> rank_of(dim);
  std::vector<std::uint32_t> next_rank(n + 1, 0);
  for (std::uint64_t s = 0; s < dim; ++s) {
    const int k = std::popcount(s);
    const std::uint32_t r = next_rank[k]++;
    rank_of[s] = r;
    qudit_register[k * rank_dim + r] = input.amplitudes[s];
  }

  EmulationResult result;
  apply_qudit_evolution(ladder, theta, qudit_register, result.v_invocations);

  result.state.qubit_count = n;
  result.state.amplitudes.resize(dim);
  for (std::uint64_t s = 0; s < dim; ++s) {
    result.state.amplitudes[s] =
        qudit_register[std::popcount(s) * rank_dim + rank_of[s]];
  }
  return result;
}

SingleUseReplicationResult single_use_super_replication(int n, double alpha,
                                                        double beta, double theta,
                                                        GammaPolicy policy,
                                                        std::uint64_t seed) {
  if (n < 2) {
    throw std::domain_error("single_use_super_replication: need n >= 2");
  }
  if (!(theta >= 0.0) || !(theta < 2.0 * std::numbers::pi)) {
    throw std::domain_error("single_use_super_replication: theta must lie in [0, 2*pi)");
  }
  const auto budget = [alpha, beta](double m) {
    return std::ceil(2.0 * alpha * std::pow(m, beta));
  };
  if (budget(1.0) > static_cast<double>(n)) {
    throw std::domain_error(
        "single_use_super_replication: even one copy exceeds the use budget");
  }

  // The budget is monotone in m; start from the real-valued solution and
  // binary-search the largest m that still fits.
  const double raw = std::pow(n / (2.0 * alpha), 1.0 / beta);
  if (!(raw < static_cast<double>(std::int64_t{1} << 22))) {
    throw UnsupportedScaleError("single_use_super_replication: target m too large");
  }
  std::int64_t lo = 1;
  std::int64_t hi = static_cast<std::int64_t>(raw) + 4;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (budget(static_cast<double>(mid)) <= static_cast<double>(n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  const int best_m = static_cast<int>(lo);

  SingleUseReplicationResult result;
  result.budget_slack = n - static_cast<int>(budget(static_cast<double>(best_m)));
  result.config = plan_replication(best_m, alpha, beta);
  result.config.n = n;  // the emulated budget, possibly above the plan's need
  result.config.validate();

  const QuditSpec compressed = bang_bang_effective_spectrum(n + 1);
  const double gap = compressed.eigenvalues[1] - compressed.eigenvalues[0];
  result.theta_effective = theta * gap;
  result.report =
      fidelity_sweep(result.config, policy, seed, {result.theta_effective}).front();
  return result;
}

}  // namespace superrep
