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

#include "superrep/metrology.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "superrep/errors.hpp"

namespace superrep {
namespace {

constexpr double kNormalizationTolerance = 1e-8;

void check_symmetric_scale(int m) {
  if (m < 1) {
    throw std::domain_error("SymmetricState: need m >= 1");
  }
  if (m > kMaxSymmetricQubits) {
    throw UnsupportedScaleError("SymmetricState: capped at " +
                                std::to_string(kMaxSymmetricQubits) + " qubits");
  }
}

double weight_sum(const std::vector<double>& weights) {
  CompensatedSum total;
  for (double w : weights) {
    total.add(w);
  }
  return total.value();
}

}  // namespace

void SymmetricState::validate() const {
  check_symmetric_scale(m);
  if (sector_amplitudes.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("SymmetricState: need one amplitude per sector");
  }
  if (std::abs(weight_sum(sector_weights(*this)) - 1.0) > kNormalizationTolerance) {
    throw std::domain_error("SymmetricState: state is not normalized");
  }
}

std::vector<double> sector_weights(const SymmetricState& state) {
  check_symmetric_scale(state.m);
  if (state.sector_amplitudes.size() != static_cast<std::size_t>(state.m) + 1) {
    throw std::invalid_argument("sector_weights: need one amplitude per sector");
  }
  std::vector<double> weights(state.m + 1, 0.0);
  for (int k = 0; k <= state.m; ++k) {
    const double magnitude = std::abs(state.sector_amplitudes[k]);
    if (magnitude == 0.0) {
      continue;
    }
    const double log_count = log_binomial(state.m, k);
    // The direct product preserves exact cases such as C(m, 0) * |c|^2;
    // fall back to logs when either factor leaves the comfortable range.
    if (log_count <= 600.0 && magnitude >= 1e-150) {
      weights[k] = std::exp(log_count) * (magnitude * magnitude);
    } else {
      weights[k] = std::exp(log_count + 2.0 * std::log(magnitude));
    }
  }
  return weights;
}

SymmetricState plus_state(int m) {
  check_symmetric_scale(m);
  SymmetricState state;
  state.m = m;
  state.sector_amplitudes.assign(m + 1, std::exp2(-0.5 * m));
  return state;
}

SymmetricState ghz_state(int m) {
  check_symmetric_scale(m);
  SymmetricState state;
  state.m = m;
  state.sector_amplitudes.assign(m + 1, 0.0);
  const double amp = std::sqrt(0.5);
  state.sector_amplitudes[0] = amp;
  state.sector_amplitudes[m] = amp;
  return state;
}

SymmetricState single_sector_state(int m, int k) {
  check_symmetric_scale(m);
  if (k < 0 || k > m) {
    throw std::domain_error("single_sector_state: need 0 <= k <= m");
  }
  SymmetricState state;
  state.m = m;
  state.sector_amplitudes.assign(m + 1, 0.0);
  state.sector_amplitudes[k] = std::exp(-0.5 * log_binomial(m, k));
  return state;
}

SymmetricState uniform_bulk_state(const ReplicationConfig& config) {
  config.validate();
  check_symmetric_scale(config.m);
  if (config.bulk_sector_count() < 1) {
    throw std::domain_error("uniform_bulk_state: the window holds no sector");
  }
  // log of the total count of bulk basis states, via log-sum-exp.
  double max_log = -1.0 / 0.0;
  for (int k = 0; k <= config.m; ++k) {
    if (config.is_bulk(k)) {
      max_log = std::max(max_log, log_binomial(config.m, k));
    }
  }
  CompensatedSum scaled;
  for (int k = 0; k <= config.m; ++k) {
    if (config.is_bulk(k)) {
      scaled.add(std::exp(log_binomial(config.m, k) - max_log));
    }
  }
  const double log_total = max_log + std::log(scaled.value());

  SymmetricState state;
  state.m = config.m;
  state.sector_amplitudes.assign(config.m + 1, 0.0);
  const double amp = std::exp(-0.5 * log_total);
  for (int k = 0; k <= config.m; ++k) {
    if (config.is_bulk(k)) {
      state.sector_amplitudes[k] = amp;
    }
  }
  return state;
}

double qfi(const SymmetricState& state) {
  state.validate();
  const std::vector<double> weights = sector_weights(state);
  CompensatedSum mean_acc;
  for (int k = 0; k <= state.m; ++k) {
    mean_acc.add(weights[k] * k);
  }
  const double mean = mean_acc.value();
  CompensatedSum var_acc;
  for (int k = 0; k <= state.m; ++k) {
    const double d = k - mean;
    var_acc.add(weights[k] * d * d);
  }
  return 4.0 * var_acc.value();
}

double state_fidelity_under_protocol(const SymmetricState& state,
                                     const SectorPhaseMap& map, double theta) {
  state.validate();
  if (state.m != map.m) {
    throw std::invalid_argument("state_fidelity_under_protocol: size mismatch");
  }
  const std::vector<double> weights = sector_weights(state);
  // Relative to the ideal output, sector k keeps the net phase
  // (k - a[k]) * theta - gamma[k].
  CompensatedSum re;
  CompensatedSum im;
  for (int k = 0; k <= state.m; ++k) {
    const double phase = (k - map.a[k]) * theta - map.gamma[k];
    re.add(weights[k] * std::cos(phase));
    im.add(weights[k] * std::sin(phase));
  }
  const double x = re.value();
  const double y = im.value();
  return x * x + y * y;
}

PrecisionResourceTable precision_resource_table(int n_uses, double alpha,
                                                double beta) {
  if (n_uses < 2) {
    throw std::domain_error("precision_resource_table: need n_uses >= 2");
  }
  if (n_uses > 44) {
    throw UnsupportedScaleError(
        "precision_resource_table: n_uses^2 exceeds the symmetric-state cap");
  }
  PrecisionResourceTable table;
  table.n_uses = n_uses;
  table.product_copies = n_uses * n_uses;
  table.product_qfi = qfi(plus_state(table.product_copies));
  table.ghz_qfi = qfi(ghz_state(n_uses));
  table.qudit_levels = n_uses;
  table.uses_for_product_copies =
      plan_replication(table.product_copies, alpha, beta).n;
  table.shot_noise_scaling = "O(1/sqrt(n))";
  table.heisenberg_scaling = "O(1/n)";
  return table;
}

}  // namespace superrep
