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

#include "dpalpha/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dpalpha/exact_sum.hpp"

namespace dpalpha {

NoisySortedDegrees baseline_release(const DegreeSequence& d, double eps,
                                    TrialSeed seed, NoiseMode mode) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("eps must be finite and positive");
  }
  std::vector<std::int64_t> sorted = d.degrees;
  std::sort(sorted.begin(), sorted.end());

  NoisySortedDegrees out;
  out.eps = eps;
  out.values.reserve(sorted.size());
  NoiseStream rng = seed.stream(streams::kBaseline);
  const double scale = 2.0 / eps;
  for (std::int64_t deg : sorted) {
    double v = static_cast<double>(deg);
    if (mode == NoiseMode::kOn) v += laplace_sample(scale, rng);
    out.values.push_back(v);
  }
  return out;
}

std::vector<double> isotonic_regression(std::span<const double> values) {
  struct Block {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Block> blocks;
  blocks.reserve(values.size());
  for (double v : values) {
    blocks.push_back({v, 1});
    while (blocks.size() > 1 &&
           blocks[blocks.size() - 2].mean() > blocks.back().mean()) {
      const Block last = blocks.back();
      blocks.pop_back();
      blocks.back().sum += last.sum;
      blocks.back().count += last.count;
    }
  }
  std::vector<double> out;
  out.reserve(values.size());
  for (const Block& b : blocks) {
    out.insert(out.end(), b.count, b.mean());
  }
  return out;
}

NoisySortedDegrees isotonic_postprocess(NoisySortedDegrees s) {
  s.values = isotonic_regression(s.values);
  s.postprocessed = true;
  return s;
}

AlphaEstimate baseline_fit(const NoisySortedDegrees& s, const TailConfig& c) {
  c.validate();
  const auto lo = static_cast<double>(c.d_min);
  const auto hi = static_cast<double>(c.d_max);
  ExactSum t;
  std::int64_t n = 0;
  for (double raw : s.values) {
    const double v = std::clamp(raw, 0.0, hi);
    if (v < lo) continue;
    t += tail_log_term(v, c);
    ++n;
  }
  AlphaEstimate e = fit_discrete_approx(t.value(), static_cast<double>(n));
  e.method = Method::kBaseline;
  e.model = Model::kCentral;
  e.release = Release::kNone;
  return e;
}

AlphaEstimate baseline_estimate(const DegreeSequence& d, const TailConfig& c,
                                double eps, TrialSeed seed, NoiseMode mode) {
  AlphaEstimate e =
      baseline_fit(isotonic_postprocess(baseline_release(d, eps, seed, mode)),
                   c);
  e.seed = seed.value;
  return e;
}

}  // namespace dpalpha
