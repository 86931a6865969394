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

#include <vector>

namespace superrep {

/// Neumaier-compensated accumulator. value() returns the running sum with the
/// accumulated correction folded in.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + correction_; }

 private:
  double sum_ = 0.0;
  double correction_ = 0.0;
};

/// ln C(m, k). Exact 0.0 at the endpoints k = 0 and k = m.
/// Throws std::domain_error unless 0 <= k <= m.
double log_binomial(int m, int k);

/// Binomial distribution for m fair coins: weights[k] = C(m, k) / 2^m.
/// The weights are renormalized after log-space evaluation so that their
/// compensated sum is 1 to within 1e-12 at every supported m.
struct BinomialWeights {
  int m = 0;
  std::vector<double> weights;
};

BinomialWeights binomial_weights(int m);

/// Total binomial weight of the integer sectors strictly inside
/// (k_minus, k_plus), clipped to [0, m].
double bulk_mass(int m, double k_minus, double k_plus);
double bulk_mass(const BinomialWeights& weights, double k_minus, double k_plus);

/// Gaussian estimate of the +/- alpha*m^beta window mass around m/2:
/// erf(x / sqrt(2)) with x = 2 * alpha * m^(beta - 1/2).
/// Requires alpha > 0 and 1/2 < beta < 1.
double gaussian_bulk_estimate(double alpha, double beta, int m);

/// Probability that every category count of a multinomial sample of size n
/// with the given cell probabilities deviates from its mean by strictly less
/// than alpha * n^beta. Exhaustive enumeration; supports up to 4 categories
/// and n <= 64, beyond that throws UnsupportedScaleError.
double multinomial_bulk_mass(int n, const std::vector<double>& probs,
                             double alpha, double beta);

}  // namespace superrep
