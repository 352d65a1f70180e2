// Copyright 2026 The simonbench Authors
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

#ifndef SIMONBENCH_STATS_HPP
#define SIMONBENCH_STATS_HPP

#include <cstddef>
#include <span>

namespace simonbench {

/// Standard deviation of a binomial proportion with success probability p
/// over `trials` trials.
double binomial_sigma(double p, std::size_t trials);

struct SpearmanResult {
  double rho = 0.0;
  /// One-sided p-value for rho > 0, from the t approximation with n - 2
  /// degrees of freedom.
  double p_value = 1.0;
};

/// Rank correlation with average ranks for ties. Requires x.size() ==
/// y.size() >= 3.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares. Requires at least two distinct x values.
LineFit least_squares(std::span<const double> x, std::span<const double> y);

}  // namespace simonbench

#endif  // SIMONBENCH_STATS_HPP
