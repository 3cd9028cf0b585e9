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

#ifndef DPALPHA_POWERLAW_HPP_
#define DPALPHA_POWERLAW_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dpalpha/graph.hpp"
#include "dpalpha/optimize.hpp"

namespace dpalpha {

// Fitting window [d_min, d_max] of the truncated discrete power law.
struct TailConfig {
  std::int64_t d_min = 1;
  std::int64_t d_max = 1;

  // Throws std::invalid_argument unless 1 <= d_min <= d_max.
  static TailConfig make(std::int64_t d_min, std::int64_t d_max);
  void validate() const;

  friend bool operator==(const TailConfig&, const TailConfig&) = default;
};

// Exact sufficient statistics over the tail.
struct TailStats {
  double t_disc = 0.0;  // sum of ln(d / (d_min - 0.5)) over tail degrees
  std::int64_t n = 0;   // number of tail degrees
  TailConfig config;
};

enum class Method { kDiscreteApprox, kNumericalOpt, kBaseline };
enum class Model { kNonPrivate, kCentral, kLocal };
enum class Release { kNone, kDegree, kLogStat };

std::string_view to_string(Method m);
std::string_view to_string(Model m);
std::string_view to_string(Release r);
// Accept the CLI spellings ("da", "no", "baseline", "central", "local",
// "degree", "log", ...). Throw std::invalid_argument otherwise.
Method parse_method(std::string_view s);
Model parse_model(std::string_view s);
Release parse_release(std::string_view s);

struct AlphaEstimate {
  // For invalid estimates this is the pre-clamp value, kept for diagnostics.
  double alpha = 0.0;
  bool valid = false;
  // Valid, but the optimizer stopped at the upper end of its search range.
  bool boundary_suspect = false;
  Method method = Method::kDiscreteApprox;
  Model model = Model::kNonPrivate;
  Release release = Release::kNone;
  std::optional<std::uint64_t> seed;
};

// ln(degree / (d_min - 0.5)); the per-node term of T_disc. Shared by every
// pipeline so that noise-free paths produce identical bits.
double tail_log_term(double degree, const TailConfig& c);

TailStats tail_stats(const DegreeSequence& d, const TailConfig& c);

// Truncated zeta sum over d_min..d_max of d^-alpha, accumulated with
// Neumaier compensation from the largest d down. May be +inf for very
// negative alpha.
double zeta_trunc(double alpha, const TailConfig& c);

// d^-alpha / zeta_trunc(alpha, c). Throws std::domain_error outside the
// support.
double pmf(std::int64_t d, double alpha, const TailConfig& c);
// pmf over the whole support; entry i is for degree d_min + i.
std::vector<double> pmf_table(double alpha, const TailConfig& c);

// -alpha * S - n * ln Z(alpha) with S = t_disc + n ln(d_min - 0.5), i.e. the
// discrete log-likelihood written in terms of the shifted statistic. Inputs
// may be noisy. Returns -inf if Z is non-positive or non-finite.
double log_likelihood(double t_disc, double n, const TailConfig& c,
                      double alpha);

// 1 + n / t_disc. Valid iff t_disc > 0, n > 0 and the result is finite and
// non-negative.
AlphaEstimate fit_discrete_approx(double t_disc, double n);
AlphaEstimate fit_discrete_approx(const TailStats& s);

struct FitOptions {
  ScanOptions scan;
};

// Maximizes log_likelihood in alpha. An argmax below 0 is reported invalid
// (alpha keeps the unclamped value); an argmax at the top of the search range
// is valid but flagged boundary_suspect.
AlphaEstimate fit_numerical(double t_disc, double n, const TailConfig& c,
                            const FitOptions& options = {});
AlphaEstimate fit_numerical(const TailStats& s,
                            const FitOptions& options = {});

}  // namespace dpalpha

#endif  // DPALPHA_POWERLAW_HPP_
