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

#ifndef DPALPHA_BASELINE_HPP_
#define DPALPHA_BASELINE_HPP_

#include <span>
#include <vector>

#include "dpalpha/graph.hpp"
#include "dpalpha/mechanisms.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/rng.hpp"

namespace dpalpha {

// Comparison method: release the whole degree distribution under edge-DP,
// then fit. This follows the sorted-degree-sequence release with
// constrained inference (Hay et al.), with these choices:
//
//  * The sorted sequence (ascending) receives i.i.d. Lap(2 / eps) per entry.
//    Its L1 sensitivity is 2: adding edge (u, w) raises d_u and d_w by one,
//    and the new sorted sequence is the old one with the last slot of each
//    affected value's run incremented, i.e. two positions change by one.
//  * Constrained inference is the L2 projection onto non-decreasing
//    sequences, computed with pool-adjacent-violators.
//  * The fit clamps entries to [0, d_max], keeps entries in [d_min, d_max]
//    and applies the discrete approximation to them. No binning is used.
struct NoisySortedDegrees {
  std::vector<double> values;
  double eps = 0.0;
  bool postprocessed = false;
};

NoisySortedDegrees baseline_release(const DegreeSequence& d, double eps,
                                    TrialSeed seed,
                                    NoiseMode mode = NoiseMode::kOn);

// Pool-adjacent-violators; blocks merge only on strict violations, so
// non-decreasing input is returned unchanged.
std::vector<double> isotonic_regression(std::span<const double> values);

NoisySortedDegrees isotonic_postprocess(NoisySortedDegrees s);

AlphaEstimate baseline_fit(const NoisySortedDegrees& s, const TailConfig& c);

// release -> isotonic_postprocess -> baseline_fit.
AlphaEstimate baseline_estimate(const DegreeSequence& d, const TailConfig& c,
                                double eps, TrialSeed seed,
                                NoiseMode mode = NoiseMode::kOn);

}  // namespace dpalpha

#endif  // DPALPHA_BASELINE_HPP_
