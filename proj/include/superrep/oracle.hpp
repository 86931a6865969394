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

#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "superrep/protocol.hpp"

namespace superrep {

// Dense simulation is the ground truth the closed-form fidelity is checked
// against. Basis index convention: the m system qubits occupy the high bits
// and the n ancilla qubits the low bits, so a joint basis state is
// (system << n) | ancilla and the ancilla |0^(n-j) 1^j> has index 2^j - 1.

inline constexpr int kMaxOracleQubits = 20;
inline constexpr double kOracleTolerance = 1e-10;

struct DenseState {
  int qubit_count = 0;
  std::vector<std::complex<double>> amplitudes;

  static DenseState basis_state(int qubit_count, std::uint64_t index);
  double squared_norm() const;
  /// Throws std::invalid_argument on a size mismatch and std::domain_error
  /// when the state is not normalized to within 1e-10.
  void validate() const;
};

std::complex<double> inner_product(const DenseState& a, const DenseState& b);

/// Self-inverse relabeling given as disjoint transpositions; indices not
/// listed are fixed points.
struct PermutationSpec {
  int total_qubits = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
};

/// The routing step: for every bulk-sector system state with multiple
/// j = k - bulk_first_sector() >= 1, swap ancilla |0...0> with |0^(n-j) 1^j>.
/// Pairs are emitted in increasing system index order.
PermutationSpec build_permutation_A(const ReplicationConfig& config);

void apply_permutation(const PermutationSpec& perm, DenseState& state);

/// Runs route -> n-fold phase gate -> route on |input> (x) |0...0> and
/// returns the joint (m + n)-qubit state. The phase gate multiplies each
/// joint basis state by exp(-i * theta * ancilla_weight).
DenseState run_replication_circuit(const ReplicationConfig& config,
                                   const DenseState& input, double theta);

/// l2 norm of the amplitude stranded outside the ancilla |0...0> slice.
double ancilla_residual_norm(const DenseState& joint, int ancilla_qubits);

/// Keeps the ancilla |0...0> slice. Throws InternalConsistencyError when the
/// residual exceeds 1e-10.
DenseState extract_system_register(const DenseState& joint, int ancilla_qubits);

/// Full protocol by brute force: circuit, static non-bulk phases, extraction.
/// Must agree with the closed-form phase action on every input.
DenseState apply_protocol_statevector(const ReplicationConfig& config,
                                      GammaPolicy policy, std::uint64_t seed,
                                      const DenseState& input, double theta);

/// Gate-level fidelity from the simulated channel: the protocol acts
/// diagonally in the computational basis, so the maximally entangled overlap
/// reduces to |2^-m * sum_s exp(i*|s|*theta) * D_s|^2 with D_s the effective
/// diagonal. Verifies diagonality along the way; requires m + n <= 20 and
/// m <= 12.
double choi_overlap_bruteforce(const ReplicationConfig& config, GammaPolicy policy,
                               std::uint64_t seed, double theta);

struct OracleCheckResult {
  int configurations = 0;    // (m, n, policy) combinations exercised
  int evaluations = 0;       // individual angle comparisons
  double max_abs_deviation = 0.0;
  double tolerance = kOracleTolerance;
  bool passed = false;
};

/// Sweeps budget-matched windows for every m in [2, max_m], n in [1, max_n]
/// and both phase policies, comparing the closed-form fidelity against the
/// brute-force overlap at each angle. `perturbation` is added to the
/// brute-force value to prove the check can fail; leave it 0 for real runs.
OracleCheckResult run_oracle_equivalence(int max_m, int max_n,
                                         const std::vector<double>& thetas,
                                         std::uint64_t random_seed = 1,
                                         double perturbation = 0.0);

}  // namespace superrep
