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

#include "superrep/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "superrep/errors.hpp"

namespace superrep {

int ReplicationConfig::bulk_first_sector() const {
  double lo = std::floor(k_minus) + 1.0;
  lo = std::clamp(lo, 0.0, static_cast<double>(m));
  return static_cast<int>(lo);
}

int ReplicationConfig::bulk_last_sector() const {
  double hi = std::ceil(k_plus) - 1.0;
  hi = std::clamp(hi, 0.0, static_cast<double>(m));
  return static_cast<int>(hi);
}

int ReplicationConfig::bulk_sector_count() const {
  if (!(k_minus < k_plus)) {
    return 0;
  }
  // Unclamped edges: a window lying entirely outside [0, m] is empty.
  const double lo = std::max(std::floor(k_minus) + 1.0, 0.0);
  const double hi = std::min(std::ceil(k_plus) - 1.0, static_cast<double>(m));
  if (lo > hi) {
    return 0;
  }
  return static_cast<int>(hi - lo) + 1;
}

bool ReplicationConfig::is_bulk(int k) const {
  return k_minus < static_cast<double>(k) && static_cast<double>(k) < k_plus;
}

void ReplicationConfig::validate() const {
  if (m < 1) {
    throw std::domain_error("ReplicationConfig: need m >= 1");
  }
  if (n < 1) {
    throw std::domain_error("ReplicationConfig: need n >= 1");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("ReplicationConfig: need alpha > 0");
  }
  if (!(beta > 0.5) || !(beta < 1.0)) {
    throw std::domain_error("ReplicationConfig: need 1/2 < beta < 1");
  }
  if (!std::isfinite(k_minus) || !std::isfinite(k_plus)) {
    throw std::domain_error("ReplicationConfig: window edges must be finite");
  }
  const int count = bulk_sector_count();
  if (count > 0 && count - 1 > n) {
    throw std::domain_error(
        "ReplicationConfig: bulk holds " + std::to_string(count) +
        " sectors, which needs at least " + std::to_string(count - 1) +
        " uses but only " + std::to_string(n) + " are budgeted");
  }
}

namespace {

void check_plan_inputs(int m, double alpha, double beta) {
  if (m < 1) {
    throw std::domain_error("plan: need m >= 1");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("plan: need alpha > 0");
  }
  if (!(beta > 0.5) || !(beta < 1.0)) {
    throw std::domain_error("plan: need 1/2 < beta < 1");
  }
}

ReplicationConfig make_config(int m, int n, double alpha, double beta,
                              double halfwidth) {
  ReplicationConfig config;
  config.m = m;
  config.n = n;
  config.alpha = alpha;
  config.beta = beta;
  const double center = 0.5 * m;
  const double raw_lo = center - halfwidth;
  const double raw_hi = center + halfwidth;
  config.window_clamped = raw_lo < 0.0 || raw_hi > static_cast<double>(m);
  // The clamped window still strictly contains every sector in [0, m].
  config.k_minus = std::max(raw_lo, -0.5);
  config.k_plus = std::min(raw_hi, m + 0.5);
  return config;
}

}  // namespace

ReplicationConfig plan_replication(int m, double alpha, double beta) {
  check_plan_inputs(m, alpha, beta);
  const double halfwidth = alpha * std::pow(static_cast<double>(m), beta);
  const double uses = std::ceil(2.0 * halfwidth);
  if (!(uses < static_cast<double>(std::numeric_limits<int>::max()))) {
    throw UnsupportedScaleError("plan_replication: use budget overflows int");
  }
  ReplicationConfig config =
      make_config(m, std::max(1, static_cast<int>(uses)), alpha, beta, halfwidth);
  config.validate();
  return config;
}

ReplicationConfig plan_for_budget(int m, int n_uses, double beta) {
  if (n_uses < 1) {
    throw std::domain_error("plan_for_budget: need n_uses >= 1");
  }
  const double halfwidth = 0.5 * n_uses + 0.25;
  const double alpha = halfwidth / std::pow(static_cast<double>(std::max(m, 1)), beta);
  check_plan_inputs(m, alpha, beta);
  ReplicationConfig config = make_config(m, n_uses, alpha, beta, halfwidth);
  config.validate();
  return config;
}

double uniform_phase(std::mt19937_64& rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * std::numbers::pi * (1.0 - u);                      // (0, 2*pi]
}

SectorPhaseMap build_sector_map(const ReplicationConfig& config,
                                GammaPolicy policy, std::uint64_t seed) {
  config.validate();
  SectorPhaseMap map;
  map.m = config.m;
  map.a.assign(config.m + 1, 0);
  map.gamma.assign(config.m + 1, 0.0);
  map.bulk.assign(config.m + 1, false);

  double gamma_rate = 0.0;
  if (policy == GammaPolicy::Random) {
    std::mt19937_64 rng(seed);
    gamma_rate = uniform_phase(rng);
  }
  const int first = config.bulk_first_sector();
  for (int k = 0; k <= config.m; ++k) {
    if (config.is_bulk(k)) {
      map.bulk[k] = true;
      map.a[k] = k - first;
    } else {
      map.gamma[k] = gamma_rate * k;
    }
  }
  return map;
}

double process_fidelity(const SectorPhaseMap& map, const BinomialWeights& weights,
                        double theta) {
  if (weights.m != map.m) {
    throw std::invalid_argument("process_fidelity: weight table size mismatch");
  }
  CompensatedSum re;
  CompensatedSum im;
  for (int k = 0; k <= map.m; ++k) {
    const double phase = (k - map.a[k]) * theta - map.gamma[k];
    re.add(weights.weights[k] * std::cos(phase));
    im.add(weights.weights[k] * std::sin(phase));
  }
  const double x = re.value();
  const double y = im.value();
  return x * x + y * y;
}

double process_fidelity(const SectorPhaseMap& map, double theta) {
  return process_fidelity(map, binomial_weights(map.m), theta);
}

double average_process_fidelity(const SectorPhaseMap& map) {
  const BinomialWeights weights = binomial_weights(map.m);
  // Sectors with equal d = k - a[k] rotate together; distinct d values are
  // orthogonal once averaged over the angle.
  std::vector<std::complex<double>> groups(map.m + 1, 0.0);
  for (int k = 0; k <= map.m; ++k) {
    const int d = k - map.a[k];
    groups[d] += std::polar(weights.weights[k], -map.gamma[k]);
  }
  CompensatedSum total;
  for (const auto& g : groups) {
    total.add(std::norm(g));
  }
  return total.value();
}

double average_state_fidelity(double process_fidelity, int m) {
  if (m < 1) {
    throw std::domain_error("average_state_fidelity: need m >= 1");
  }
  // exp2 saturates to inf for huge m, which correctly collapses the
  // correction term to 0.
  const double dim = std::exp2(static_cast<double>(m));
  return process_fidelity + (1.0 - process_fidelity) / (dim + 1.0);
}

FidelityBounds worst_case_bound(const ReplicationConfig& config) {
  config.validate();
  FidelityBounds bounds;
  bounds.gaussian_figure = gaussian_bulk_estimate(config.alpha, config.beta, config.m);
  const double mass = bulk_mass(config.m, config.k_minus, config.k_plus);
  const double margin = std::max(0.0, 2.0 * mass - 1.0);
  bounds.triangle_floor = margin * margin;
  return bounds;
}

std::vector<FidelityReport> fidelity_sweep(const ReplicationConfig& config,
                                           GammaPolicy policy, std::uint64_t seed,
                                           const std::vector<double>& thetas) {
  config.validate();
  if (thetas.empty()) {
    throw std::domain_error("fidelity_sweep: need at least one angle");
  }
  for (double theta : thetas) {
    if (!(theta >= 0.0) || !(theta < 2.0 * std::numbers::pi)) {
      throw std::domain_error("fidelity_sweep: angles must lie in [0, 2*pi)");
    }
  }
  const SectorPhaseMap map = build_sector_map(config, policy, seed);
  const BinomialWeights weights = binomial_weights(config.m);
  const double mass = bulk_mass(weights, config.k_minus, config.k_plus);
  const FidelityBounds bounds = worst_case_bound(config);

  std::vector<FidelityReport> reports;
  reports.reserve(thetas.size());
  for (double theta : thetas) {
    FidelityReport report;
    report.theta = theta;
    report.process_fidelity = process_fidelity(map, weights, theta);
    report.average_state_fidelity =
        average_state_fidelity(report.process_fidelity, config.m);
    report.gaussian_bound = bounds.gaussian_figure;
    report.bulk_mass = mass;
    report.worst_case_bound = bounds.triangle_floor;
    reports.push_back(report);
  }
  return reports;
}

}  // namespace superrep
