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

#include "superrep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "superrep/errors.hpp"

namespace superrep {
namespace {

void check_qubit_count(int qubit_count) {
  if (qubit_count < 1) {
    throw std::domain_error("DenseState: need at least one qubit");
  }
  if (qubit_count > kMaxOracleQubits) {
    throw UnsupportedScaleError("DenseState: dense simulation is capped at " +
                                std::to_string(kMaxOracleQubits) + " qubits");
  }
}

}  // namespace

DenseState DenseState::basis_state(int qubit_count, std::uint64_t index) {
  check_qubit_count(qubit_count);
  const std::uint64_t dim = std::uint64_t{1} << qubit_count;
  if (index >= dim) {
    throw std::invalid_argument("basis_state: index out of range");
  }
  DenseState state;
  state.qubit_count = qubit_count;
  state.amplitudes.assign(dim, 0.0);
  state.amplitudes[index] = 1.0;
  return state;
}

double DenseState::squared_norm() const {
  CompensatedSum total;
  for (const auto& amp : amplitudes) {
    total.add(std::norm(amp));
  }
  return total.value();
}

void DenseState::validate() const {
  check_qubit_count(qubit_count);
  if (amplitudes.size() != (std::uint64_t{1} << qubit_count)) {
    throw std::invalid_argument("DenseState: amplitude count does not match 2^qubits");
  }
  if (std::abs(squared_norm() - 1.0) > 1e-10) {
    throw std::domain_error("DenseState: state is not normalized");
  }
}

std::complex<double> inner_product(const DenseState& a, const DenseState& b) {
  if (a.qubit_count != b.qubit_count || a.amplitudes.size() != b.amplitudes.size()) {
    throw std::invalid_argument("inner_product: register size mismatch");
  }
  CompensatedSum re;
  CompensatedSum im;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    const std::complex<double> term = std::conj(a.amplitudes[i]) * b.amplitudes[i];
    re.add(term.real());
    im.add(term.imag());
  }
  return {re.value(), im.value()};
}

PermutationSpec build_permutation_A(const ReplicationConfig& config) {
  config.validate();
  if (config.m + config.n > kMaxOracleQubits) {
    throw UnsupportedScaleError("build_permutation_A: m + n exceeds the dense cap");
  }
  PermutationSpec perm;
  perm.total_qubits = config.m + config.n;
  const int first = config.bulk_first_sector();
  const std::uint64_t system_dim = std::uint64_t{1} << config.m;
  for (std::uint64_t s = 0; s < system_dim; ++s) {
    const int k = std::popcount(s);
    if (!config.is_bulk(k)) {
      continue;
    }
    const int j = k - first;
    if (j < 1) {
      continue;  // multiple 0 leaves the ancillas untouched
    }
    const std::uint64_t source = s << config.n;
    const std::uint64_t target = source | ((std::uint64_t{1} << j) - 1);
    perm.pairs.emplace_back(source, target);
  }
  return perm;
}

void apply_permutation(const PermutationSpec& perm, DenseState& state) {
  if (state.qubit_count != perm.total_qubits) {
    throw std::invalid_argument("apply_permutation: register size mismatch");
  }
  for (const auto& [lhs, rhs] : perm.pairs) {
    std::swap(state.amplitudes[lhs], state.amplitudes[rhs]);
  }
}

DenseState run_replication_circuit(const ReplicationConfig& config,
                                   const DenseState& input, double theta) {
  config.validate();
  input.validate();
  if (input.qubit_count != config.m) {
    throw std::invalid_argument("run_replication_circuit: input must have m qubits");
  }
  const PermutationSpec perm = build_permutation_A(config);

  DenseState joint;
  joint.qubit_count = config.m + config.n;
  joint.amplitudes.assign(std::uint64_t{1} << joint.qubit_count, 0.0);
  for (std::uint64_t s = 0; s < input.amplitudes.size(); ++s) {
    joint.amplitudes[s << config.n] = input.amplitudes[s];
  }

  apply_permutation(perm, joint);
  // One phase per ancilla excitation count: exp(-i * theta * weight).
  std::vector<std::complex<double>> phase(config.n + 1);
  for (int w = 0; w <= config.n; ++w) {
    phase[w] = std::polar(1.0, -theta * w);
  }
  const std::uint64_t ancilla_mask = (std::uint64_t{1} << config.n) - 1;
  for (std::uint64_t idx = 0; idx < joint.amplitudes.size(); ++idx) {
    const int w = std::popcount(idx & ancilla_mask);
    if (w != 0) {
      joint.amplitudes[idx] *= phase[w];
    }
  }
  apply_permutation(perm, joint);
  return joint;
}

double ancilla_residual_norm(const DenseState& joint, int ancilla_qubits) {
  if (ancilla_qubits < 0 || ancilla_qubits >= joint.qubit_count) {
    throw std::invalid_argument("ancilla_residual_norm: bad ancilla count");
  }
  const std::uint64_t ancilla_mask = (std::uint64_t{1} << ancilla_qubits) - 1;
  CompensatedSum stranded;
  for (std::uint64_t idx = 0; idx < joint.amplitudes.size(); ++idx) {
    if ((idx & ancilla_mask) != 0) {
      stranded.add(std::norm(joint.amplitudes[idx]));
    }
  }
  return std::sqrt(std::max(0.0, stranded.value()));
}

DenseState extract_system_register(const DenseState& joint, int ancilla_qubits) {
  const double residual = ancilla_residual_norm(joint, ancilla_qubits);
  if (residual > kOracleTolerance) {
    throw InternalConsistencyError(
        "extract_system_register: ancillas not restored, residual norm " +
        std::to_string(residual));
  }
  DenseState system;
  system.qubit_count = joint.qubit_count - ancilla_qubits;
  system.amplitudes.resize(std::uint64_t{1} << system.qubit_count);
  for (std::uint64_t s = 0; s < system.amplitudes.size(); ++s) {
    system.amplitudes[s] = joint.amplitudes[s << ancilla_qubits];
  }
  return system;
}

DenseState apply_protocol_statevector(const ReplicationConfig& config,
                                      GammaPolicy policy, std::uint64_t seed,
                                      const DenseState& input, double theta) {
  const SectorPhaseMap map = build_sector_map(config, policy, seed);
  const DenseState joint = run_replication_circuit(config, input, theta);
  DenseState output = extract_system_register(joint, config.n);
  for (std::uint64_t s = 0; s < output.amplitudes.size(); ++s) {
    const double gamma = map.gamma[std::popcount(s)];
    if (gamma != 0.0) {
      output.amplitudes[s] *= std::polar(1.0, -gamma);
    }
  }
  return output;
}

double choi_overlap_bruteforce(const ReplicationConfig& config, GammaPolicy policy,
                               std::uint64_t seed, double theta) {
  config.validate();
  if (config.m + config.n > kMaxOracleQubits || config.m > 12) {
    throw UnsupportedScaleError("choi_overlap_bruteforce: instance too large");
  }
  const std::uint64_t dim = std::uint64_t{1} << config.m;
  CompensatedSum re;
  CompensatedSum im;
  for (std::uint64_t s = 0; s < dim; ++s) {
    const DenseState out = apply_protocol_statevector(
        config, policy, seed, DenseState::basis_state(config.m, s), theta);
    // The channel must act diagonally: each basis state maps to a phase.
    for (std::uint64_t t = 0; t < dim; ++t) {
      if (t != s && std::abs(out.amplitudes[t]) > kOracleTolerance) {
        throw InternalConsistencyError(
            "choi_overlap_bruteforce: off-diagonal leakage detected");
      }
    }
    const std::complex<double> diag = out.amplitudes[s];
    if (std::abs(std::abs(diag) - 1.0) > kOracleTolerance) {
      throw InternalConsistencyError(
          "choi_overlap_bruteforce: diagonal amplitude is not a pure phase");
    }
    const std::complex<double> term =
        std::polar(1.0, theta * std::popcount(s)) * diag;
    re.add(term.real());
    im.add(term.imag());
  }
  const double x = re.value() / static_cast<double>(dim);
  const double y = im.value() / static_cast<double>(dim);
  return x * x + y * y;
}

OracleCheckResult run_oracle_equivalence(int max_m, int max_n,
                                         const std::vector<double>& thetas,
                                         std::uint64_t random_seed,
                                         double perturbation) {
  if (max_m < 2 || max_n < 1) {
    throw std::domain_error("run_oracle_equivalence: need max_m >= 2 and max_n >= 1");
  }
  if (thetas.empty()) {
    throw std::domain_error("run_oracle_equivalence: need at least one angle");
  }
  OracleCheckResult result;
  for (int m = 2; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      const ReplicationConfig config = plan_for_budget(m, n);
      for (GammaPolicy policy : {GammaPolicy::Zero, GammaPolicy::Random}) {
        const std::uint64_t seed = policy == GammaPolicy::Random ? random_seed : 0;
        const SectorPhaseMap map = build_sector_map(config, policy, seed);
        const BinomialWeights weights = binomial_weights(m);
        ++result.configurations;
        for (double theta : thetas) {
          const double closed = process_fidelity(map, weights, theta);
          const double brute =
              choi_overlap_bruteforce(config, policy, seed, theta) + perturbation;
          result.max_abs_deviation =
              std::max(result.max_abs_deviation, std::abs(closed - brute));
          ++result.evaluations;
        }
      }
    }
  }
  result.passed = result.max_abs_deviation <= result.tolerance;
  return result;
}

}  // namespace superrep
