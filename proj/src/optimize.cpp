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

#include "dpalpha/optimize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dpalpha {

double golden_section_maximize(const std::function<double(double)>& f,
                               double a, double b, double tolerance,
                               int max_iterations) {
  static const double kInvPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iterations && (b - a) > tolerance; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

ScanResult scan_and_refine(const std::function<double(double)>& f,
                           const ScanOptions& options) {
  if (!(options.step > 0.0) || !(options.upper > options.lower)) {
    throw std::invalid_argument("invalid scan range");
  }
  ScanResult r;
  const auto cells = static_cast<long>(
      std::ceil((options.upper - options.lower) / options.step - 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(cells) + 1);
  for (long i = 0; i <= cells; ++i) {
    grid.push_back(i == cells ? options.upper : options.lower + i * options.step);
  }

  long best = -1;
  double best_value = -std::numeric_limits<double>::infinity();
  double min_value = std::numeric_limits<double>::infinity();
  for (long i = 0; i <= cells; ++i) {
    const double v = f(grid[static_cast<std::size_t>(i)]);
    if (std::isnan(v)) continue;
    min_value = std::min(min_value, v);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (best < 0 || !std::isfinite(best_value)) return r;
  r.found = true;
  r.flat = (best_value == min_value);

  const double a = grid[static_cast<std::size_t>(std::max(best - 1, 0L))];
  const double b = grid[static_cast<std::size_t>(std::min(best + 1, cells))];
  double x = golden_section_maximize(f, a, b, options.tolerance,
                                     options.max_iterations);
  double fx = f(x);
  // Refinement must never lose to the grid point it started from.
  if (!(fx >= best_value)) {
    x = grid[static_cast<std::size_t>(best)];
    fx = best_value;
  }
  r.argmax = x;
  r.value = fx;
  r.at_upper = (options.upper - x) <= options.tolerance;
  return r;
}

}  // namespace dpalpha
