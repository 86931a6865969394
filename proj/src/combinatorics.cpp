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

#include "superrep/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "superrep/errors.hpp"

namespace superrep {
namespace {

// Past this point a weight table would cost gigabytes; everything the desk
// tool does stays far below it.
constexpr int kMaxWeightTableSize = 1 << 22;

}  // namespace

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    correction_ += (sum_ - t) + x;
  } else {
    correction_ += (x - t) + sum_;
  }
  sum_ = t;
}

double log_binomial(int m, int k) {
  if (m < 0 || k < 0 || k > m) {
    throw std::domain_error("log_binomial: need 0 <= k <= m, got m=" +
                            std::to_string(m) + " k=" + std::to_string(k));
  }
  if (k == 0 || k == m) {
    return 0.0;
  }
  // Grouping the subtrahends keeps the value exactly symmetric in k <-> m - k.
  return std::lgamma(m + 1.0) - (std::lgamma(k + 1.0) + std::lgamma(m - k + 1.0));
}

BinomialWeights binomial_weights(int m) {
  if (m < 1) {
    throw std::domain_error("binomial_weights: need m >= 1");
  }
  if (m + 1 > kMaxWeightTableSize) {
    throw UnsupportedScaleError("binomial_weights: m too large for a dense table");
  }
  BinomialWeights result;
  result.m = m;
  result.weights.resize(m + 1);
  const double log_scale = m * std::numbers::ln2;
  CompensatedSum total;
  for (int k = 0; k <= m; ++k) {
    const double w = std::exp(log_binomial(m, k) - log_scale);
    result.weights[k] = w;
    total.add(w);
  }
  // lgamma noise leaves the raw sum a few ulp off 1 at large m; one global
  // rescale restores sum(weights) == 1 to within 1e-12.
  const double inv = 1.0 / total.value();
  for (double& w : result.weights) {
    w *= inv;
  }
  return result;
}

double bulk_mass(const BinomialWeights& weights, double k_minus, double k_plus) {
  const int m = weights.m;
  if (!std::isfinite(k_minus) || !std::isfinite(k_plus)) {
    throw std::domain_error("bulk_mass: window endpoints must be finite");
  }
  double lo = std::floor(k_minus) + 1.0;  // smallest integer strictly above k_minus
  double hi = std::ceil(k_plus) - 1.0;    // largest integer strictly below k_plus
  lo = std::max(lo, 0.0);
  hi = std::min(hi, static_cast<double>(m));
  if (lo > hi) {
    return 0.0;
  }
  CompensatedSum mass;
  for (int k = static_cast<int>(lo); k <= static_cast<int>(hi); ++k) {
    mass.add(weights.weights[k]);
  }
  return mass.value();
}

double bulk_mass(int m, double k_minus, double k_plus) {
  return bulk_mass(binomial_weights(m), k_minus, k_plus);
}

double gaussian_bulk_estimate(double alpha, double beta, int m) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("gaussian_bulk_estimate: need alpha > 0");
  }
  if (!(beta > 0.5) || !(beta < 1.0)) {
    throw std::domain_error("gaussian_bulk_estimate: need 1/2 < beta < 1");
  }
  if (m < 1) {
    throw std::domain_error("gaussian_bulk_estimate: need m >= 1");
  }
  const double x = 2.0 * alpha * std::pow(static_cast<double>(m), beta - 0.5);
  return std::erf(x / std::numbers::sqrt2);
}

double multinomial_bulk_mass(int n, const std::vector<double>& probs,
                             double alpha, double beta) {
  const int d = static_cast<int>(probs.size());
  if (d < 1) {
    throw std::domain_error("multinomial_bulk_mass: need at least one category");
  }
  if (d > 4) {
    throw UnsupportedScaleError(
        "multinomial_bulk_mass: enumeration supports at most 4 categories");
  }
  if (n < 1) {
    throw std::domain_error("multinomial_bulk_mass: need n >= 1");
  }
  if (n > 64) {
    throw UnsupportedScaleError(
        "multinomial_bulk_mass: enumeration supports n <= 64");
  }
  CompensatedSum prob_total;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw std::domain_error("multinomial_bulk_mass: probabilities must be positive");
    }
    prob_total.add(p);
  }
  if (std::abs(prob_total.value() - 1.0) > 1e-12) {
    throw std::domain_error("multinomial_bulk_mass: probabilities must sum to 1");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::domain_error("multinomial_bulk_mass: need alpha > 0");
  }
  if (!(beta > 0.5) || !(beta < 1.0)) {
    throw std::domain_error("multinomial_bulk_mass: need 1/2 < beta < 1");
  }
  const double halfwidth = alpha * std::pow(static_cast<double>(n), beta);
  const double max_p = *std::max_element(probs.begin(), probs.end());
  if (n * max_p + halfwidth > n * (1.0 + 1e-12)) {
    throw std::domain_error(
        "multinomial_bulk_mass: window exceeds the sample size; "
        "need n*max(probs) + alpha*n^beta <= n");
  }

  std::vector<double> log_p(d);
  for (int i = 0; i < d; ++i) {
    log_p[i] = std::log(probs[i]);
  }
  const double log_n_factorial = std::lgamma(n + 1.0);

  const auto in_window = [&](int count, int category) {
    return std::abs(count - n * probs[category]) < halfwidth;
  };

  CompensatedSum mass;
  std::vector<int> counts(d, 0);
  // Depth-first over category counts; the last category absorbs the rest.
  const auto recurse = [&](auto&& self, int category, int remaining) -> void {
    if (category == d - 1) {
      if (!in_window(remaining, category)) {
        return;
      }
      counts[category] = remaining;
      double log_pmf = log_n_factorial;
      for (int i = 0; i < d; ++i) {
        log_pmf += counts[i] * log_p[i] - std::lgamma(counts[i] + 1.0);
      }
      mass.add(std::exp(log_pmf));
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      if (!in_window(c, category)) {
        continue;
      }
      counts[category] = c;
      self(self, category + 1, remaining - c);
    }
  };
  recurse(recurse, 0, n);
  return mass.value();
}

}  // namespace superrep
