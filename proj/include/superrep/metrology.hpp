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
#include <string>
#include <vector>

#include "superrep/protocol.hpp"

namespace superrep {

// Permutation-symmetric m-qubit states are fully described by one amplitude
// per Hamming-weight sector, which keeps phase-estimation figures of merit
// computable at thousands of qubits.

inline constexpr int kMaxSymmetricQubits = 2000;

struct SymmetricState {
  int m = 0;
  // c[k], shared by all C(m, k) basis states of weight k.
  std::vector<std::complex<double>> sector_amplitudes;

  void validate() const;
};

/// w[k] = C(m, k) * |c[k]|^2, the probability of weight k. Evaluated in log
/// space only when the direct product would lose range.
std::vector<double> sector_weights(const SymmetricState& state);

SymmetricState plus_state(int m);           // all qubits in (|0> + |1>)/sqrt(2)
SymmetricState ghz_state(int m);            // (|0...0> + |1...1>)/sqrt(2)
SymmetricState single_sector_state(int m, int k);
/// Equal weight on every bulk sector of the window; the window must hold at
/// least one sector.
SymmetricState uniform_bulk_state(const ReplicationConfig& config);

/// Quantum Fisher information for estimating theta through the m-fold phase
/// gate: 4 * Var(weight). Caps at m^2 (GHZ), equals m for the plus state.
double qfi(const SymmetricState& state);

/// Overlap fidelity |<ideal | replicated>|^2 for a symmetric input pushed
/// through the sector phase map at angle theta.
double state_fidelity_under_protocol(const SymmetricState& state,
                                     const SectorPhaseMap& map, double theta);

struct PrecisionResourceTable {
  int n_uses = 0;           // sequential uses available
  int product_copies = 0;   // n^2 parallel copies matched by those uses
  double product_qfi = 0.0; // qfi of the n^2-qubit plus state
  double ghz_qfi = 0.0;     // qfi of the n-qubit GHZ state
  int qudit_levels = 0;     // multi-level gate that stands in for the n uses
  int uses_for_product_copies = 0;  // replication budget for the n^2 copies
  std::string shot_noise_scaling;
  std::string heisenberg_scaling;
};

/// Side-by-side account of why n^2 replicated copies probed with product
/// states reach the same 1/n precision scaling as n sequential uses.
PrecisionResourceTable precision_resource_table(int n_uses, double alpha,
                                                double beta);

}  // namespace superrep
