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
#include <vector>

#include "superrep/oracle.hpp"
#include "superrep/protocol.hpp"

namespace superrep {

// A single multi-level gate whose generator spectrum matches the joint
// excitation count of n qubits can stand in for all n single-qubit gate uses
// at once. The routines here realize that exchange exactly and count how
// often the multi-level gate fires.

inline constexpr int kMaxEmulationQubits = 12;

struct QuditSpec {
  int levels = 0;
  std::vector<double> eigenvalues;  // generator spectrum, unit of theta
};

/// Canonical ladder: eigenvalue j on level j, exactly.
QuditSpec ladder_spectrum(int levels);

/// Ladder compressed by fast switching: eigenvalue j / (levels - 1) on level
/// j, so the spectrum spans [0, 1] and driving the gate at angle theta
/// realizes the plain ladder at theta / (levels - 1). Needs levels >= 2.
QuditSpec bang_bang_effective_spectrum(int levels);

/// Smallest ancilla count whose register can index every Hamming-weight
/// multiplicity of n qubits: least a with 2^a >= C(n, floor(n/2)).
int min_ancilla_count(int n);

/// Multiplies each level slice of a level-major register by
/// exp(-i * theta * eigenvalue) and increments the invocation counter once.
/// The register length must be a multiple of spec.levels.
void apply_qudit_evolution(const QuditSpec& spec, double theta,
                           std::vector<std::complex<double>>& register_amplitudes,
                           int& invocation_count);

struct EmulationResult {
  DenseState state;
  int v_invocations = 0;
};

/// Routes each n-qubit basis state to (level = Hamming weight, multiplicity
/// rank in ascending index order), applies one ladder evolution on n + 1
/// levels with min_ancilla_count(n) ancillas carrying the rank, and routes
/// back. The output equals the n-fold phase gate at theta applied to input.
EmulationResult emulate_qubits_from_qudit(int n, double theta,
                                          const DenseState& input);

struct SingleUseReplicationResult {
  ReplicationConfig config;
  FidelityReport report;
  int budget_slack = 0;          // n minus the budget the chosen m consumes
  double theta_effective = 0.0;  // theta scaled down by the spectrum gap
};

/// End-to-end composition: one bang-bang-compressed gate on n levels worth of
/// structure emulates n uses at theta / n, which feed the replicator with the
/// largest m whose planned budget ceil(2 * alpha * m^beta) still fits n.
/// Throws std::domain_error when even m = 1 does not fit.
SingleUseReplicationResult single_use_super_replication(
    int n, double alpha, double beta, double theta,
    GammaPolicy policy = GammaPolicy::Random, std::uint64_t seed = 0);

}  // namespace superrep
