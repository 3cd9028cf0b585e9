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


#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dpalpha/local.hpp"
#include "oracles.hpp"

namespace dpalpha {
namespace {

constexpr double kLn2 = std::numbers::ln2;

std::vector<NodeReport> degree_reports(std::vector<double> values) {
  std::vector<NodeReport> out;
  for (double v : values) out.push_back({ReportKind::kDegree, v});
  return out;
}

std::vector<NodeReport> log_reports(std::vector<double> values) {
  std::vector<NodeReport> out;
  for (double v : values) out.push_back({ReportKind::kLogStat, v});
  return out;
}

TEST(NodeReleaseDegree, NoiseOffIsExact) {
  NoiseStream rng(RngSeed{1, 0});
  const NodeReport r = node_release_degree(7, 1.0, rng, NoiseMode::kOff);
  EXPECT_EQ(r.kind, ReportKind::kDegree);
  EXPECT_EQ(r.value, 7.0);
}

TEST(NodeReleaseDegree, SeededReplay) {
  NoiseStream rng(RngSeed{55, 9});
  const NodeReport r = node_release_degree(5, 1.0, rng);
  NoiseStream replay(RngSeed{55, 9});
  EXPECT_NEAR(r.value, 5.0 + oracle::laplace_quantile(2.0, replay.uniform01()),
              1e-9);
}

TEST(NodeReleaseDegree, DoublingEpsHalvesNoise) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    NoiseStream a(RngSeed{s, 0}), b(RngSeed{s, 0});
    const double at1 = node_release_degree(4, 1.0, a).value - 4.0;
    const double at2 = node_release_degree(4, 2.0, b).value - 4.0;
    EXPECT_NEAR(at2, at1 / 2.0, 1e-14);
  }
}

TEST(NodeReleaseLog, Examples) {
  const TailConfig c = TailConfig::make(1, 100);
  NoiseStream rng(RngSeed{2, 0});
  EXPECT_NEAR(node_release_log(1, c, 1.0, rng, NoiseMode::kOff).value, kLn2,
              1e-15);
  EXPECT_EQ(node_release_log(0, c, 1.0, rng, NoiseMode::kOff).value, 0.0);

  NoiseStream seeded(RngSeed{77, 4}), replay(RngSeed{77, 4});
  const NodeReport r = node_release_log(3, c, 1.0, seeded);
  EXPECT_EQ(r.kind, ReportKind::kLogStat);
  EXPECT_NEAR(r.value,
              std::log(6.0) +
                  oracle::laplace_quantile(2 * kLn2, replay.uniform01()),
              1e-9);
}

TEST(NodeRelease, RejectsBadEps) {
  NoiseStream rng(RngSeed{1, 0});
  EXPECT_THROW(node_release_degree(1, 0.0, rng), std::invalid_argument);
  EXPECT_THROW(node_release_log(1, TailConfig::make(1, 3), -1.0, rng),
               std::invalid_argument);
}

TEST(AggregateDegree, Examples) {
  const TailConfig c = TailConfig::make(1, 10);
  NoisyTailStats s = aggregate_degree_reports(
      degree_reports({1.2, 0.4, 3.0}), c, 1.0);
  EXPECT_EQ(s.n_tilde, 2.0);
  EXPECT_NEAR(s.t_tilde, std::log(1.2 / 0.5) + std::log(3.0 / 0.5), 1e-15);
  EXPECT_EQ(s.model, Model::kLocal);
  EXPECT_EQ(s.release, Release::kDegree);
  EXPECT_FALSE(s.budget.has_value());

  s = aggregate_degree_reports(degree_reports({0.2, -3.0, 0.99}), c, 1.0);
  EXPECT_EQ(s.n_tilde, 0.0);
  EXPECT_EQ(s.t_tilde, 0.0);

  // No upper cap: a report above d_max still counts.
  s = aggregate_degree_reports(degree_reports({50.0}), c, 1.0);
  EXPECT_EQ(s.n_tilde, 1.0);
}

TEST(AggregateDegree, NoiseOffMatchesTailStats) {
  const TailConfig c = TailConfig::make(1, 10);
  const DegreeSequence d{{1, 1, 1, 1}};
  const auto reports =
      release_reports(d, ReportKind::kDegree, c, 1.0, TrialSeed{1}, NoiseMode::kOff);
  const NoisyTailStats s = aggregate_degree_reports(reports, c, 1.0);
  const TailStats want = tail_stats(d, c);
  EXPECT_EQ(s.t_tilde, want.t_disc);
  EXPECT_EQ(s.n_tilde, static_cast<double>(want.n));
}

TEST(AggregateLog, Examples) {
  const TailConfig c = TailConfig::make(1, 10);
  NoisyTailStats s =
      aggregate_log_reports(log_reports({0.8, 0.1, 1.5}), c, 1.0);
  EXPECT_EQ(s.n_tilde, 2.0);
  EXPECT_DOUBLE_EQ(s.t_tilde, 2.3);

  s = aggregate_log_reports({}, c, 1.0);
  EXPECT_EQ(s.n_tilde, 0.0);
  EXPECT_EQ(s.t_tilde, 0.0);

  const DegreeSequence d{{2, 2}};
  const auto reports = release_reports(d, ReportKind::kLogStat, c, 1.0,
                                       TrialSeed{1}, NoiseMode::kOff);
  s = aggregate_log_reports(reports, c, 1.0);
  EXPECT_NEAR(s.t_tilde, 2 * std::log(4.0), 1e-15);
  EXPECT_EQ(s.n_tilde, 2.0);
  EXPECT_EQ(s.t_tilde, tail_stats(d, c).t_disc);
}

TEST(Aggregate, MixedKindsAreRejected) {
  std::vector<NodeReport> mixed{{ReportKind::kDegree, 2.0},
                                {ReportKind::kLogStat, 1.0}};
  const TailConfig c = TailConfig::make(1, 10);
  EXPECT_THROW(aggregate_degree_reports(mixed, c, 1.0), ProtocolError);
  EXPECT_THROW(aggregate_reports(mixed, c, 1.0), ProtocolError);
  std::reverse(mixed.begin(), mixed.end());
  EXPECT_THROW(aggregate_reports(mixed, c, 1.0), ProtocolError);
}

TEST(Aggregate, PermutationInvariant) {
  std::mt19937_64 rng(17);
  const TailConfig c = TailConfig::make(2, 200);
  DegreeSequence d;
  std::uniform_int_distribution<std::int64_t> deg(0, 150);
  for (int i = 0; i < 2000; ++i) d.degrees.push_back(deg(rng));
  for (ReportKind kind : {ReportKind::kDegree, ReportKind::kLogStat}) {
    auto reports = release_reports(d, kind, c, 0.8, TrialSeed{9});
    const NoisyTailStats base = aggregate_reports(reports, c, 0.8);
    for (int rep = 0; rep < 10; ++rep) {
      std::shuffle(reports.begin(), reports.end(), rng);
      const NoisyTailStats s = aggregate_reports(reports, c, 0.8);
      EXPECT_EQ(s.t_tilde, base.t_tilde);
      EXPECT_EQ(s.n_tilde, base.n_tilde);
    }
  }
}

TEST(LocalFit, DiscreteApproxExample) {
  NoisyTailStats s;
  s.config = TailConfig::make(1, 10);
  s.model = Model::kLocal;
  s.release = Release::kLogStat;
  s.t_tilde = 4 * kLn2;
  s.n_tilde = 4;
  const AlphaEstimate e = local_fit(s, Method::kDiscreteApprox);
  EXPECT_NEAR(e.alpha, 2.44270, 1e-5);
  EXPECT_EQ(e.model, Model::kLocal);
  EXPECT_EQ(e.release, Release::kLogStat);
}

TEST(Local, NoiseOffEquivalenceIsBitExact) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::int64_t> deg(0, 40);
  for (int rep = 0; rep < 40; ++rep) {
    DegreeSequence d;
    for (int i = 0; i < 5 + rep * 7; ++i) d.degrees.push_back(deg(rng));
    // Local aggregation has no upper cap, so d_max covers every degree.
    const TailConfig c = TailConfig::make(1 + rep % 3, 40);
    const TailStats s = tail_stats(d, c);
    const AlphaEstimate da_ref = fit_discrete_approx(s);
    const AlphaEstimate no_ref = fit_numerical(s);
    for (ReportKind kind : {ReportKind::kDegree, ReportKind::kLogStat}) {
      const AlphaEstimate da = local_estimate(
          d, c, kind, Method::kDiscreteApprox, 1.0, TrialSeed{1}, NoiseMode::kOff);
      const AlphaEstimate no = local_estimate(
          d, c, kind, Method::kNumericalOpt, 1.0, TrialSeed{1}, NoiseMode::kOff);
      EXPECT_EQ(da.valid, da_ref.valid);
      EXPECT_EQ(no.valid, no_ref.valid);
      if (da_ref.valid) {
        EXPECT_EQ(da.alpha, da_ref.alpha);
      }
      if (no_ref.valid) {
        EXPECT_EQ(no.alpha, no_ref.alpha);
      }
    }
  }
}

TEST(Local, OneReleasePerNodeFromItsOwnStream) {
  const DegreeSequence d{{0, 3, 1, 7, 2}};
  const TailConfig c = TailConfig::make(1, 10);
  const TrialSeed seed{31};
  for (ReportKind kind : {ReportKind::kDegree, ReportKind::kLogStat}) {
    const auto reports = release_reports(d, kind, c, 1.5, seed);
    ASSERT_EQ(reports.size(), d.size());
    for (std::size_t v = 0; v < d.size(); ++v) {
      NoiseStream rng = seed.node_stream(v);
      const NodeReport want =
          kind == ReportKind::kDegree
              ? node_release_degree(d.degrees[v], 1.5, rng)
              : node_release_log(d.degrees[v], c, 1.5, rng);
      EXPECT_EQ(reports[v].value, want.value);
      EXPECT_EQ(reports[v].kind, kind);
    }
  }
}

}  // namespace
}  // namespace dpalpha
