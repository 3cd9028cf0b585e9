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

#ifndef DPALPHA_LOCAL_HPP_
#define DPALPHA_LOCAL_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dpalpha/central.hpp"
#include "dpalpha/graph.hpp"
#include "dpalpha/mechanisms.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/rng.hpp"

namespace dpalpha {

// Local edge-DP protocol, simulated in process. Every node releases exactly
// one noisy value with its full budget eps; the aggregator folds the reports
// into (t_tilde, n_tilde) and fits. Aggregation and fitting only see the
// reports.
//
// Each edge touches the releases of both endpoints, so a node spends eps/2
// per incident edge: noise scales are 2 * sensitivity / eps.

enum class ReportKind { kDegree, kLogStat };

struct NodeReport {
  ReportKind kind = ReportKind::kDegree;
  double value = 0.0;
};

class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Release to_release(ReportKind kind);
ReportKind to_report_kind(Release release);

// Noise-free per-node log statistic: ln(d_v / (d_min - 0.5)) for tail
// degrees, 0 below d_min. Gating uses the true degree.
double log_contribution(std::int64_t d_v, const TailConfig& c);

// d_v + Lap(2 / eps). Noisy degrees stay real-valued.
NodeReport node_release_degree(std::int64_t d_v, double eps, NoiseStream& rng,
                               NoiseMode mode = NoiseMode::kOn);

// log_contribution(d_v) + Lap(2 ln((d_min+1)/d_min) / eps).
NodeReport node_release_log(std::int64_t d_v, const TailConfig& c, double eps,
                            NoiseStream& rng,
                            NoiseMode mode = NoiseMode::kOn);

// Runs every node's release; node v draws from seed.node_stream(v).
std::vector<NodeReport> release_reports(const DegreeSequence& d,
                                        ReportKind kind, const TailConfig& c,
                                        double eps, TrialSeed seed,
                                        NoiseMode mode = NoiseMode::kOn);

// Degree reports with value >= d_min (no upper cap) contribute
// ln(value / (d_min - 0.5)) to t_tilde and 1 to n_tilde.
NoisyTailStats aggregate_degree_reports(std::span<const NodeReport> reports,
                                        const TailConfig& c, double eps);

// Log reports with value >= ln(d_min / (d_min - 0.5)) contribute their value
// to t_tilde and 1 to n_tilde.
NoisyTailStats aggregate_log_reports(std::span<const NodeReport> reports,
                                     const TailConfig& c, double eps);

// Dispatches on the kind of the first report. Mixed kinds throw
// ProtocolError.
NoisyTailStats aggregate_reports(std::span<const NodeReport> reports,
                                 const TailConfig& c, double eps);

// Option A (discrete approximation) or B (numerical optimization).
AlphaEstimate local_fit(const NoisyTailStats& s, Method method,
                        const FitOptions& options = {});

AlphaEstimate local_estimate(const DegreeSequence& d, const TailConfig& c,
                             ReportKind kind, Method method, double eps,
                             TrialSeed seed, NoiseMode mode = NoiseMode::kOn,
                             const FitOptions& options = {});

}  // namespace dpalpha

#endif  // DPALPHA_LOCAL_HPP_
