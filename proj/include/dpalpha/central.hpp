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

#ifndef DPALPHA_CENTRAL_HPP_
#define DPALPHA_CENTRAL_HPP_

#include <optional>

#include "dpalpha/graph.hpp"
#include "dpalpha/mechanisms.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/rng.hpp"

namespace dpalpha {

// Privatized sufficient statistics together with the budget and noise
// scales that produced them. No projection is applied: either value may be
// negative.
struct NoisyTailStats {
  double t_tilde = 0.0;
  double n_tilde = 0.0;
  TailConfig config;
  Model model = Model::kCentral;
  Release release = Release::kNone;
  double eps = 0.0;
  // Present for the central model only.
  std::optional<PrivacyBudget> budget;
  double t_noise_scale = 0.0;
  double n_noise_scale = 0.0;
};

// t_tilde = t_disc + Lap(2 ln((d_min+1)/d_min) / eps_t)
// n_tilde = n + Lap(2 / eps_n)
// Draws come from the trial's kTailNoise and kCountNoise streams.
NoisyTailStats noisy_tail_stats(const TailStats& s, const PrivacyBudget& b,
                                TrialSeed seed,
                                NoiseMode mode = NoiseMode::kOn);

// Estimator stage. Consumes released statistics only; the raw degree
// sequence is not reachable from here.
AlphaEstimate estimate_from_noisy(const NoisyTailStats& s, Method method,
                                  const FitOptions& options = {});

AlphaEstimate central_da(const DegreeSequence& d, const TailConfig& c,
                         const PrivacyBudget& b, TrialSeed seed,
                         NoiseMode mode = NoiseMode::kOn);

AlphaEstimate central_no(const DegreeSequence& d, const TailConfig& c,
                         const PrivacyBudget& b, TrialSeed seed,
                         NoiseMode mode = NoiseMode::kOn,
                         const FitOptions& options = {});

}  // namespace dpalpha

#endif  // DPALPHA_CENTRAL_HPP_
