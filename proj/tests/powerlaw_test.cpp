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


#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "dpalpha/powerlaw.hpp"
#include "oracles.hpp"

namespace dpalpha {
namespace {

constexpr double kLn2 = std::numbers::ln2;

// Independent sampler: std::discrete_distribution over the truncated support.
std::vector<std::int64_t> draw_power_law(std::mt19937_64& rng, double alpha,
                                         TailConfig c, int count) {
  std::vector<double> w;
  for (std::int64_t d = c.d_min; d <= c.d_max; ++d) {
    w.push_back(std::pow(static_cast<double>(d), -alpha));
  }
  std::discrete_distribution<std::int64_t> dist(w.begin(), w.end());
  std::vector<std::int64_t> out(static_cast<std::size_t>(count));
  for (auto& d : out) d = c.d_min + dist(rng);
  return out;
}

double oracle_argmax(double t, double n, TailConfig c) {
  return oracle::grid_argmax(
      [&](double a) { return oracle::log_likelihood(t, n, c.d_min, c.d_max, a); },
      -5.0, 50.0, 1e-2, 1e-5);
}

TEST(TailStats, Examples) {
  TailStats s = tail_stats({{1, 1, 1, 1}}, TailConfig::make(1, 10));
  EXPECT_EQ(s.n, 4);
  EXPECT_NEAR(s.t_disc, 4 * kLn2, 1e-15);

  s = tail_stats({{1, 2, 3, 4}}, TailConfig::make(2, 3));
  EXPECT_EQ(s.n, 2);
  EXPECT_NEAR(s.t_disc, std::log(4.0 / 3.0) + std::log(2.0), 1e-15);
  EXPECT_NEAR(s.t_disc, 0.98083, 1e-5);

  s = tail_stats({{0, 0}}, TailConfig::make(1, 5));
  EXPECT_EQ(s.n, 0);
  EXPECT_EQ(s.t_disc, 0.0);
}

TEST(TailStats, LowerBoundOnLogStatistic) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 50; ++rep) {
    const TailConfig c = TailConfig::make(1 + rep % 4, 40);
    const auto d = draw_power_law(rng, 2.2, TailConfig::make(1, 60), 200);
    const TailStats s = tail_stats({d}, c);
    EXPECT_NEAR(s.t_disc, static_cast<double>(oracle::t_disc(d, c.d_min, c.d_max)),
                1e-10);
    EXPECT_GE(s.t_disc, s.n * std::log(c.d_min / (c.d_min - 0.5)) - 1e-12);
  }
}

TEST(TailConfigTest, Validation) {
  EXPECT_THROW(TailConfig::make(0, 5), std::invalid_argument);
  EXPECT_THROW(TailConfig::make(3, 2), std::invalid_argument);
  EXPECT_NO_THROW(TailConfig::make(2, 2));
}

TEST(Zeta, Examples) {
  for (double a : {-3.0, 0.0, 1.7, 40.0}) {
    EXPECT_EQ(zeta_trunc(a, TailConfig::make(1, 1)), 1.0);
  }
  EXPECT_DOUBLE_EQ(zeta_trunc(1.0, TailConfig::make(1, 2)), 1.5);
  const double oracle = static_cast<double>(oracle::zeta(2.5L, 3, 1000));
  EXPECT_NEAR(zeta_trunc(2.5, TailConfig::make(3, 1000)), oracle,
              1e-15 * oracle);
}

TEST(Zeta, OverflowIsNonFinite) {
  EXPECT_FALSE(std::isfinite(zeta_trunc(-400.0, TailConfig::make(1, 10))));
}

TEST(Zeta, StrictlyDecreasingInAlpha) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> start(-5.0, 10.0);
  std::uniform_int_distribution<std::int64_t> lo(1, 20), span(1, 500);
  for (int rep = 0; rep < 100; ++rep) {
    const std::int64_t d_min = lo(rng);
    const TailConfig c = TailConfig::make(d_min, d_min + span(rng));
    double a = start(rng);
    double prev = zeta_trunc(a, c);
    for (int k = 0; k < 20; ++k) {
      a += 0.25;
      const double z = zeta_trunc(a, c);
      EXPECT_LT(z, prev) << "alpha=" << a;
      prev = z;
    }
  }
}

TEST(Pmf, Examples) {
  EXPECT_EQ(pmf(1, 3.0, TailConfig::make(1, 1)), 1.0);
  EXPECT_DOUBLE_EQ(pmf(1, 1.0, TailConfig::make(1, 2)), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(pmf(2, 1.0, TailConfig::make(1, 2)), 1.0 / 3.0);
  const long double want =
      std::pow(3.0L, -2.5L) / oracle::zeta(2.5L, 3, 1000);
  EXPECT_NEAR(pmf(3, 2.5, TailConfig::make(3, 1000)),
              static_cast<double>(want), 1e-15);
}

TEST(Pmf, OutsideSupportThrows) {
  EXPECT_THROW(pmf(0, 2.0, TailConfig::make(1, 5)), std::domain_error);
  EXPECT_THROW(pmf(6, 2.0, TailConfig::make(1, 5)), std::domain_error);
}

TEST(Pmf, NormalizesOverSupport) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(-1.0, 6.0);
  std::uniform_int_distribution<std::int64_t> lo(1, 50), hi(0, 9950);
  for (int rep = 0; rep < 100; ++rep) {
    const std::int64_t d_min = lo(rng);
    const TailConfig c = TailConfig::make(d_min, d_min + hi(rng));
    const double a = alpha(rng);
    const std::vector<double> p = pmf_table(a, c);
    ASSERT_EQ(p.size(), static_cast<std::size_t>(c.d_max - c.d_min + 1));
    long double total = 0.0L;
    for (double v : p) total += v;
    for (std::int64_t d : {c.d_min, (c.d_min + c.d_max) / 2, c.d_max}) {
      EXPECT_EQ(p[static_cast<std::size_t>(d - c.d_min)], pmf(d, a, c));
    }
    EXPECT_NEAR(static_cast<double>(total), 1.0, 1e-12)
        << "alpha=" << a << " c=(" << c.d_min << "," << c.d_max << ")";
  }
}

TEST(LogLikelihood, Examples) {
  EXPECT_EQ(log_likelihood(0.0, 0.0, TailConfig::make(2, 30), 1.3), 0.0);

  const TailConfig c = TailConfig::make(1, 10);
  const double a = 2.4427;
  const long double want = oracle::log_likelihood(2.77259L, 4.0L, 1, 10, a);
  EXPECT_NEAR(log_likelihood(2.77259, 4.0, c, a), static_cast<double>(want),
              1e-12);

  EXPECT_EQ(log_likelihood(1.0, 1.0, c, -400.0),
            -std::numeric_limits<double>::infinity());
}

TEST(LogLikelihood, ConcaveForPositiveStatistics) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> alpha(1.5, 3.5);
  const double h = 0.01;
  for (int rep = 0; rep < 20; ++rep) {
    const TailConfig c = TailConfig::make(1 + rep % 3, 100 + 50 * rep);
    const auto d = draw_power_law(rng, alpha(rng), c, 50 + 40 * rep);
    const TailStats s = tail_stats({d}, c);
    const auto f = [&](double a) {
      return log_likelihood(s.t_disc, static_cast<double>(s.n), c, a);
    };
    for (double a = 0.1 + h; a <= 10.0 - h; a += 0.05) {
      EXPECT_LE(f(a + h) - 2 * f(a) + f(a - h), 1e-9) << "alpha=" << a;
    }
  }
}

TEST(DiscreteApprox, Examples) {
  AlphaEstimate e = fit_discrete_approx(4 * kLn2, 4.0);
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.alpha, 1.0 + 1.0 / kLn2, 1e-15);
  EXPECT_NEAR(e.alpha, 2.44270, 1e-5);
  EXPECT_EQ(e.method, Method::kDiscreteApprox);

  e = fit_discrete_approx(std::log(4.0), 1.0);
  EXPECT_TRUE(e.valid);
  EXPECT_NEAR(e.alpha, 1.72135, 1e-5);

  e = fit_discrete_approx(-0.3, 5.0);
  EXPECT_FALSE(e.valid);
  EXPECT_DOUBLE_EQ(e.alpha, 1.0 + 5.0 / -0.3);

  EXPECT_FALSE(fit_discrete_approx(1.0, -0.5).valid);
  EXPECT_FALSE(fit_discrete_approx(0.0, 0.0).valid);
}

TEST(DiscreteApprox, ClosedFormConsistency) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 100; ++rep) {
    const TailConfig c = TailConfig::make(1 + rep % 5, 500);
    const TailStats s =
        tail_stats({draw_power_law(rng, 2.3, TailConfig::make(1, 500), 300)}, c);
    if (s.n == 0) continue;
    const double ratio = static_cast<double>(s.n) / s.t_disc;
    EXPECT_EQ(fit_discrete_approx(s).alpha, 1.0 + ratio);
    EXPECT_NEAR(fit_discrete_approx(s).alpha - 1.0, ratio, 4e-16 * (1 + ratio));
  }
}

TEST(NumericalFit, AllAtMinimumMatchesGridOracle) {
  const TailConfig c = TailConfig::make(1, 10);
  const TailStats s = tail_stats({{1, 1, 1, 1}}, c);
  const AlphaEstimate e = fit_numerical(s);
  const double want = oracle::grid_argmax(
      [&](double a) { return oracle::log_likelihood(s.t_disc, 4, 1, 10, a); },
      -5.0, 50.0, 1e-4, 1e-4);
  EXPECT_NEAR(e.alpha, want, 1e-4);
  // Every degree sits at d_min, so the score keeps rising with alpha.
  EXPECT_TRUE(e.valid);
  EXPECT_TRUE(e.boundary_suspect);
}

TEST(NumericalFit, RecoversGeneratorAlphaOnLargeSample) {
  std::mt19937_64 rng(2024);
  const TailConfig c = TailConfig::make(1, 1000);
  const TailStats s = tail_stats({draw_power_law(rng, 2.5, c, 100000)}, c);
  const AlphaEstimate e = fit_numerical(s);
  ASSERT_TRUE(e.valid);
  EXPECT_FALSE(e.boundary_suspect);
  EXPECT_NEAR(e.alpha, 2.5, 0.02);
  EXPECT_NEAR(e.alpha, oracle_argmax(s.t_disc, static_cast<double>(s.n), c),
              1e-4);
}

TEST(NumericalFit, AgreesWithGridOracleOnRandomInstances) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> alpha(1.3, 4.0);
  std::uniform_int_distribution<std::int64_t> lo(1, 3), span(4, 60);
  std::uniform_int_distribution<int> size(30, 2000);
  for (int rep = 0; rep < 50; ++rep) {
    const std::int64_t d_min = lo(rng);
    const TailConfig c = TailConfig::make(d_min, d_min + span(rng));
    const auto d = draw_power_law(rng, alpha(rng), TailConfig::make(1, c.d_max),
                                  size(rng));
    const double t = static_cast<double>(oracle::t_disc(d, c.d_min, c.d_max));
    double n = 0;
    for (auto v : d) n += (v >= c.d_min && v <= c.d_max);
    if (n == 0) continue;
    EXPECT_NEAR(fit_numerical(t, n, c).alpha, oracle_argmax(t, n, c), 1e-4)
        << "rep " << rep;
  }
}

TEST(NumericalFit, DegenerateAndNonFiniteInputsAreInvalid) {
  const TailConfig c = TailConfig::make(1, 10);
  EXPECT_FALSE(fit_numerical(0.0, 0.0, c).valid);
  EXPECT_FALSE(fit_numerical(std::nan(""), 3.0, c).valid);
  EXPECT_FALSE(
      fit_numerical(1.0, std::numeric_limits<double>::infinity(), c).valid);
}

TEST(NumericalFit, NegativeArgmaxIsInvalidAndKeepsPreClampValue) {
  // Every degree at d_max: the score prefers the most negative alpha.
  const TailConfig c = TailConfig::make(1, 10);
  const TailStats s = tail_stats({{10, 10, 10}}, c);
  const AlphaEstimate e = fit_numerical(s);
  EXPECT_FALSE(e.valid);
  EXPECT_LT(e.alpha, 0.0);
}

TEST(NumericalFit, BootstrapRecoveryWithinTwoStandardErrors) {
  std::mt19937_64 rng(77);
  const TailConfig c = TailConfig::make(1, 1000);
  const auto d = draw_power_law(rng, 2.5, c, 20000);
  const double fit = fit_numerical(tail_stats({d}, c)).alpha;

  std::uniform_int_distribution<std::size_t> pick(0, d.size() - 1);
  std::vector<double> boot;
  for (int b = 0; b < 100; ++b) {
    std::vector<std::int64_t> resample(d.size());
    for (auto& v : resample) v = d[pick(rng)];
    boot.push_back(fit_numerical(tail_stats({resample}, c)).alpha);
  }
  double mean = 0;
  for (double v : boot) mean += v;
  mean /= boot.size();
  double var = 0;
  for (double v : boot) var += (v - mean) * (v - mean);
  const double se = std::sqrt(var / (boot.size() - 1));
  EXPECT_GT(se, 0.0);
  EXPECT_LE(std::abs(fit - 2.5), 2 * se) << "fit " << fit << " se " << se;
}

TEST(Enums, RoundTrip) {
  for (Method m : {Method::kDiscreteApprox, Method::kNumericalOpt,
                   Method::kBaseline}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  for (Model m : {Model::kNonPrivate, Model::kCentral, Model::kLocal}) {
    EXPECT_EQ(parse_model(to_string(m)), m);
  }
  for (Release r : {Release::kNone, Release::kDegree, Release::kLogStat}) {
    EXPECT_EQ(parse_release(to_string(r)), r);
  }
  EXPECT_THROW(parse_method("mle"), std::invalid_argument);
}

}  // namespace
}  // namespace dpalpha
