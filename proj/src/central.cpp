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

#include "dpalpha/central.hpp"

#include <stdexcept>

namespace dpalpha {

NoisyTailStats noisy_tail_stats(const TailStats& s, const PrivacyBudget& b,
                                TrialSeed seed, NoiseMode mode) {
  if (!(b.eps_t > 0.0) || !(b.eps_n > 0.0)) {
    throw std::invalid_argument("privacy budgets must be positive");
  }
  NoisyTailStats out;
  out.config = s.config;
  out.model = Model::kCentral;
  out.eps = b.eps;
  out.budget = b;
  out.t_noise_scale = sensitivity_t_disc(s.config.d_min) / b.eps_t;
  out.n_noise_scale = sensitivity_n() / b.eps_n;
  out.t_tilde = s.t_disc;
  out.n_tilde = static_cast<double>(s.n);
  if (mode == NoiseMode::kOn) {
    NoiseStream t_rng = seed.stream(streams::kTailNoise);
    NoiseStream n_rng = seed.stream(streams::kCountNoise);
    out.t_tilde += laplace_sample(out.t_noise_scale, t_rng);
    out.n_tilde += laplace_sample(out.n_noise_scale, n_rng);
  }
  return out;
}

AlphaEstimate estimate_from_noisy(const NoisyTailStats& s, Method method,
                                  const FitOptions& options) {
  AlphaEstimate e;
  switch (method) {
    case Method::kDiscreteApprox:
      e = fit_discrete_approx(s.t_tilde, s.n_tilde);
      break;
    case Method::kNumericalOpt:
      e = fit_numerical(s.t_tilde, s.n_tilde, s.config, options);
      break;
    case Method::kBaseline:
      throw std::invalid_argument(
          "the baseline estimator does not consume tail statistics");
  }
  e.model = s.model;
  e.release = s.release;
  return e;
}

namespace {

AlphaEstimate run_central(const DegreeSequence& d, const TailConfig& c,
                          const PrivacyBudget& b, TrialSeed seed,
                          NoiseMode mode, Method method,
                          const FitOptions& options) {
  const NoisyTailStats released =
      noisy_tail_stats(tail_stats(d, c), b, seed, mode);
  AlphaEstimate e = estimate_from_noisy(released, method, options);
  e.seed = seed.value;
  return e;
}

}  // namespace

AlphaEstimate central_da(const DegreeSequence& d, const TailConfig& c,
                         const PrivacyBudget& b, TrialSeed seed,
                         NoiseMode mode) {
  return run_central(d, c, b, seed, mode, Method::kDiscreteApprox, {});
}

AlphaEstimate central_no(const DegreeSequence& d, const TailConfig& c,
                         const PrivacyBudget& b, TrialSeed seed,
                         NoiseMode mode, const FitOptions& options) {
  return run_central(d, c, b, seed, mode, Method::kNumericalOpt, options);
}

}  // namespace dpalpha
