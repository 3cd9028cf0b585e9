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

#ifndef DPALPHA_OPTIMIZE_HPP_
#define DPALPHA_OPTIMIZE_HPP_

#include <functional>

namespace dpalpha {

struct ScanOptions {
  double lower = -10.0;
  double upper = 50.0;
  double step = 0.25;
  double tolerance = 1e-8;
  int max_iterations = 500;
};

struct ScanResult {
  double argmax = 0.0;
  double value = 0.0;
  bool found = false;     // false if no finite value was seen
  bool flat = false;      // every scanned value identical
  bool at_upper = false;  // argmax within tolerance of the upper bound
};

// Golden-section search for the maximum of a unimodal f on [a, b]; stops
// once the bracket is narrower than tolerance.
double golden_section_maximize(const std::function<double(double)>& f,
                               double a, double b, double tolerance,
                               int max_iterations = 500);

// Coarse scan over [lower, upper] at `step`, then golden-section refinement
// inside the two cells adjacent to the best grid point. The scan picks the
// global grid maximum even when f is not concave.
ScanResult scan_and_refine(const std::function<double(double)>& f,
                           const ScanOptions& options = {});

}  // namespace dpalpha

#endif  // DPALPHA_OPTIMIZE_HPP_
