// Copyright 2026 The dpalpha Authors
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

#ifndef DPALPHA_MECHANISMS_HPP_
#define DPALPHA_MECHANISMS_HPP_

#include <cstdint>

#include "dpalpha/rng.hpp"

namespace dpalpha {

// Diagnostic switch: kOff skips every noise draw so that each private
// pipeline collapses onto its non-private counterpart.
enum class NoiseMode { kOn, kOff };

struct PrivacyBudget {
  double eps = 0.0;
  double eps_t = 0.0;  // spent on the log statistic
  double eps_n = 0.0;  // spent on the tail count
};

// eps_t = fraction_t * eps, eps_n = eps - eps_t. Throws std::invalid_argument
// unless eps > 0 and fraction_t lies strictly inside (0, 1).
PrivacyBudget split_budget(double eps, double fraction_t = 0.5);

// Inverse CDF of Laplace(0, scale) at u in (0, 1).
double laplace_from_uniform(double scale, double u);

// One Laplace(0, scale) draw. Throws std::invalid_argument if scale is not
// finite and positive.
double laplace_sample(double scale, NoiseStream& rng);

// Global sensitivities under edge neighbors.
//
// A single edge moves two endpoint degrees by one. For a tail node the
// per-node term ln(d / (d_min - 0.5)) changes by at most ln((d_min+1)/d_min),
// and entering or leaving the tail changes it by ln(d_min / (d_min - 0.5)),
// which is no larger. Hence:
//   T_disc     : 2 ln((d_min + 1) / d_min)
//   log stat   :   ln((d_min + 1) / d_min)   (one node's release)
//   N          : 2
//   degree     : 1
// The functions return these bounds, not empirical maxima. d_min < 1 throws
// std::invalid_argument.
double sensitivity_t_disc(std::int64_t d_min);
double sensitivity_log_stat(std::int64_t d_min);
constexpr double sensitivity_n() { return 2.0; }
constexpr double sensitivity_degree() { return 1.0; }

}  // namespace dpalpha

#endif  // DPALPHA_MECHANISMS_HPP_
