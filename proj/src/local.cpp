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

#include "dpalpha/local.hpp"

#include <cmath>

#include "dpalpha/exact_sum.hpp"

namespace dpalpha {

Release to_release(ReportKind kind) {
  return kind == ReportKind::kDegree ? Release::kDegree : Release::kLogStat;
}

ReportKind to_report_kind(Release release) {
  switch (release) {
    case Release::kDegree: return ReportKind::kDegree;
    case Release::kLogStat: return ReportKind::kLogStat;
    case Release::kNone: break;
  }
  throw std::invalid_argument("local model requires a degree or log release");
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw std::invalid_argument("eps must be finite and positive");
  }
}

NoisyTailStats make_local_stats(const TailConfig& c, double eps,
                                Release release, double t_scale) {
  NoisyTailStats s;
  s.config = c;
  s.model = Model::kLocal;
  s.release = release;
  s.eps = eps;
  s.t_noise_scale = t_scale;
  return s;
}

void check_kinds(std::span<const NodeReport> reports, ReportKind expected) {
  for (const NodeReport& r : reports) {
    if (r.kind != expected) {
      throw ProtocolError("report kinds are mixed within one protocol run");
    }
  }
}

}  // namespace

double log_contribution(std::int64_t d_v, const TailConfig& c) {
  if (d_v < c.d_min) return 0.0;
  return tail_log_term(static_cast<double>(d_v), c);
}

NodeReport node_release_degree(std::int64_t d_v, double eps, NoiseStream& rng,
                               NoiseMode mode) {
  check_eps(eps);
  NodeReport r{ReportKind::kDegree, static_cast<double>(d_v)};
  if (mode == NoiseMode::kOn) {
    r.value += laplace_sample(sensitivity_degree() / (eps / 2.0), rng);
  }
  return r;
}

NodeReport node_release_log(std::int64_t d_v, const TailConfig& c, double eps,
                            NoiseStream& rng, NoiseMode mode) {
  check_eps(eps);
  NodeReport r{ReportKind::kLogStat, log_contribution(d_v, c)};
  if (mode == NoiseMode::kOn) {
    r.value += laplace_sample(sensitivity_log_stat(c.d_min) / (eps / 2.0), rng);
  }
  return r;
}

std::vector<NodeReport> release_reports(const DegreeSequence& d,
                                        ReportKind kind, const TailConfig& c,
                                        double eps, TrialSeed seed,
                                        NoiseMode mode) {
  c.validate();
  std::vector<NodeReport> reports;
  reports.reserve(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) {
    NoiseStream rng = seed.node_stream(v);
    reports.push_back(kind == ReportKind::kDegree
                          ? node_release_degree(d.degrees[v], eps, rng, mode)
                          : node_release_log(d.degrees[v], c, eps, rng, mode));
  }
  return reports;
}

NoisyTailStats aggregate_degree_reports(std::span<const NodeReport> reports,
                                        const TailConfig& c, double eps) {
  check_kinds(reports, ReportKind::kDegree);
  NoisyTailStats s = make_local_stats(c, eps, Release::kDegree,
                                      sensitivity_degree() / (eps / 2.0));
  const auto threshold = static_cast<double>(c.d_min);
  ExactSum t;
  std::int64_t n = 0;
  for (const NodeReport& r : reports) {
    if (!(r.value >= threshold)) continue;
    t += tail_log_term(r.value, c);
    ++n;
  }
  s.t_tilde = t.value();
  s.n_tilde = static_cast<double>(n);
  return s;
}

NoisyTailStats aggregate_log_reports(std::span<const NodeReport> reports,
                                     const TailConfig& c, double eps) {
  check_kinds(reports, ReportKind::kLogStat);
  NoisyTailStats s = make_local_stats(c, eps, Release::kLogStat,
                                      sensitivity_log_stat(c.d_min) /
                                          (eps / 2.0));
  const double threshold = tail_log_term(static_cast<double>(c.d_min), c);
  ExactSum t;
  std::int64_t n = 0;
  for (const NodeReport& r : reports) {
    if (!(r.value >= threshold)) continue;
    t += r.value;
    ++n;
  }
  s.t_tilde = t.value();
  s.n_tilde = static_cast<double>(n);
  return s;
}

NoisyTailStats aggregate_reports(std::span<const NodeReport> reports,
                                 const TailConfig& c, double eps) {
  if (reports.empty() || reports.front().kind == ReportKind::kDegree) {
    return aggregate_degree_reports(reports, c, eps);
  }
  return aggregate_log_reports(reports, c, eps);
}

AlphaEstimate local_fit(const NoisyTailStats& s, Method method,
                        const FitOptions& options) {
  return estimate_from_noisy(s, method, options);
}

AlphaEstimate local_estimate(const DegreeSequence& d, const TailConfig& c,
                             ReportKind kind, Method method, double eps,
                             TrialSeed seed, NoiseMode mode,
                             const FitOptions& options) {
  const std::vector<NodeReport> reports =
      release_reports(d, kind, c, eps, seed, mode);
  AlphaEstimate e = local_fit(aggregate_reports(reports, c, eps), method,
                              options);
  e.seed = seed.value;
  return e;
}

}  // namespace dpalpha
