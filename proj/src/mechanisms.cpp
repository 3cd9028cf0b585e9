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

#include "dpalpha/mechanisms.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dpalpha {

PrivacyBudget split_budget(double eps, double fraction_t) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("eps must be finite and positive");
  }
  if (!(fraction_t > 0.0 && fraction_t < 1.0)) {
    throw std::invalid_argument("budget fraction must lie in (0, 1), got " +
                                std::to_string(fraction_t));
  }
  PrivacyBudget b;
  b.eps = eps;
  // The larger share lies in [eps/2, eps], so eps minus it is exact and the
  // two shares sum back to eps without rounding.
  if (fraction_t <= 0.5) {
    b.eps_n = eps - fraction_t * eps;
    b.eps_t = eps - b.eps_n;
  } else {
    b.eps_t = fraction_t * eps;
    b.eps_n = eps - b.eps_t;
  }
  return b;
}

double laplace_from_uniform(double scale, double u) {
  // Each branch takes the log of a quantity computed without cancellation.
  if (u < 0.5) return scale * std::log(2.0 * u);
  if (u > 0.5) return -scale * std::log(2.0 * (1.0 - u));
  return 0.0;
}

double laplace_sample(double scale, NoiseStream& rng) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw std::invalid_argument("Laplace scale must be finite and positive");
  }
  return laplace_from_uniform(scale, rng.uniform01());
}

namespace {

void check_d_min(std::int64_t d_min) {
  if (d_min < 1) throw std::invalid_argument("d_min must be >= 1");
}

}  // namespace

double sensitivity_t_disc(std::int64_t d_min) {
  return 2.0 * sensitivity_log_stat(d_min);
}

double sensitivity_log_stat(std::int64_t d_min) {
  check_d_min(d_min);
  const auto k = static_cast<double>(d_min);
  return std::log1p(1.0 / k);
}

}  // namespace dpalpha
