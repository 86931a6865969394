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

#include <cstdint>
#include <random>
#include <vector>

#include "superrep/combinatorics.hpp"

namespace superrep {

// The replicator acts on m qubits sector by sector, where sector k collects
// the basis states of Hamming weight k. Sectors strictly inside the window
// (k_minus, k_plus) are the "bulk": there the device reproduces the phase of
// the target m-fold product exactly, up to a sector-independent offset. The
// remaining sectors receive a parameter-independent phase chosen by policy.

/// Phase policy for sectors outside the bulk window.
enum class GammaPolicy { Zero, Random };

struct ReplicationConfig {
  int m = 0;             // target copy count (qubits acted on)
  int n = 0;             // available uses of the underlying gate
  double alpha = 1.0;    // window scale
  double beta = 0.6;     // window exponent, 1/2 < beta < 1
  double k_minus = 0.0;  // open window lower edge
  double k_plus = 0.0;   // open window upper edge
  bool window_clamped = false;  // requested window spilled past [0, m]

  /// Smallest sector strictly above k_minus, never below 0.
  int bulk_first_sector() const;
  /// Largest sector strictly below k_plus, never above m.
  int bulk_last_sector() const;
  /// Number of bulk sectors; 0 when the window is empty.
  int bulk_sector_count() const;
  bool is_bulk(int k) const;

  /// Throws std::domain_error unless m >= 1, n >= 1, alpha > 0,
  /// 1/2 < beta < 1, the window edges are finite, and the bulk fits the use
  /// budget (bulk_sector_count() - 1 <= n).
  void validate() const;
};

/// Window m/2 +/- alpha*m^beta and use budget n = ceil(2*alpha*m^beta).
/// A window that spills past [0, m] is clamped to (-1/2, m + 1/2) and flagged;
/// the protocol then degrades gracefully to exact replication.
ReplicationConfig plan_replication(int m, double alpha, double beta);

/// Inverse planning: given a fixed use budget, center the window on m/2 with
/// half-width n_uses/2 + 1/4. The quarter offset keeps the open-window edges
/// away from integers, so the bulk holds at most n_uses + 1 sectors and the
/// largest applied multiple never exceeds n_uses.
ReplicationConfig plan_for_budget(int m, int n_uses, double beta = 0.6);

/// Per-sector action of the replicator: sector k acquires the running phase
/// a[k] * theta plus the static offset gamma[k].
struct SectorPhaseMap {
  int m = 0;
  std::vector<int> a;          // applied phase multiple, 0 <= a[k] <= n
  std::vector<double> gamma;   // static phase, radians; 0 on bulk sectors
  std::vector<bool> bulk;      // sector inside the window
};

/// Deterministic for fixed (config, policy, seed). The bulk multiples are
/// a[k] = k - bulk_first_sector(); under GammaPolicy::Random all non-bulk
/// sectors share one draw gamma_k = gamma * k with gamma in (0, 2*pi].
SectorPhaseMap build_sector_map(const ReplicationConfig& config,
                                GammaPolicy policy, std::uint64_t seed);

/// Single uniform draw from (0, 2*pi] using the top 53 bits of the generator,
/// so the value stream is identical across platforms.
double uniform_phase(std::mt19937_64& rng);

/// Gate-level (process) fidelity between the replicator and the ideal m-fold
/// product at angle theta:
///   | sum_k p_k * exp(i*((k - a[k])*theta - gamma[k])) |^2
/// with p_k the fair-coin binomial weights.
double process_fidelity(const SectorPhaseMap& map, double theta);
double process_fidelity(const SectorPhaseMap& map, const BinomialWeights& weights,
                        double theta);

/// Average of process_fidelity over theta uniform on [0, 2*pi), evaluated in
/// closed form by grouping sectors with equal k - a[k].
double average_process_fidelity(const SectorPhaseMap& map);

/// Average fidelity of the output state over Haar-random inputs:
///   F + (1 - F) / (2^m + 1), monotone in the process fidelity F.
double average_state_fidelity(double process_fidelity, int m);

struct FidelityBounds {
  double gaussian_figure = 0.0;  // erf window estimate, heuristic figure
  double triangle_floor = 0.0;   // max(0, 2*bulk_mass - 1)^2, rigorous floor
};

/// Parameter-independent bounds for the worst angle. Only triangle_floor is a
/// guaranteed lower bound on the process fidelity; gaussian_figure tracks the
/// bulk mass itself and is reported for scaling comparisons.
FidelityBounds worst_case_bound(const ReplicationConfig& config);

struct FidelityReport {
  double theta = 0.0;
  double process_fidelity = 0.0;
  double average_state_fidelity = 0.0;
  double gaussian_bound = 0.0;
  double bulk_mass = 0.0;
  double worst_case_bound = 0.0;  // triangle floor
};

/// Evaluates the closed-form fidelity at each angle in thetas (all in
/// [0, 2*pi)). The sector map is built once, so one seed covers the sweep.
std::vector<FidelityReport> fidelity_sweep(const ReplicationConfig& config,
                                           GammaPolicy policy, std::uint64_t seed,
                                           const std::vector<double>& thetas);

}  // namespace superrep
