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

#include "dpalpha/powerlaw.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dpalpha/exact_sum.hpp"

namespace dpalpha {

TailConfig TailConfig::make(std::int64_t d_min, std::int64_t d_max) {
  TailConfig c{d_min, d_max};
  c.validate();
  return c;
}

void TailConfig::validate() const {
  if (d_min < 1) throw std::invalid_argument("d_min must be >= 1");
  if (d_max < d_min) throw std::invalid_argument("d_max must be >= d_min");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kDiscreteApprox: return "da";
    case Method::kNumericalOpt: return "no";
    case Method::kBaseline: return "baseline";
  }
  return "?";
}

std::string_view to_string(Model m) {
  switch (m) {
    case Model::kNonPrivate: return "non-private";
    case Model::kCentral: return "central";
    case Model::kLocal: return "local";
  }
  return "?";
}

std::string_view to_string(Release r) {
  switch (r) {
    case Release::kNone: return "none";
    case Release::kDegree: return "degree";
    case Release::kLogStat: return "log";
  }
  return "?";
}

Method parse_method(std::string_view s) {
  if (s == "da" || s == "discrete-approx") return Method::kDiscreteApprox;
  if (s == "no" || s == "numerical-opt") return Method::kNumericalOpt;
  if (s == "baseline" || s == "base") return Method::kBaseline;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

Model parse_model(std::string_view s) {
  if (s == "non-private" || s == "none") return Model::kNonPrivate;
  if (s == "central") return Model::kCentral;
  if (s == "local") return Model::kLocal;
  throw std::invalid_argument("unknown model '" + std::string(s) + "'");
}

Release parse_release(std::string_view s) {
  if (s == "none") return Release::kNone;
  if (s == "degree" || s == "dr") return Release::kDegree;
  if (s == "log" || s == "log-stat" || s == "lr") return Release::kLogStat;
  throw std::invalid_argument("unknown release '" + std::string(s) + "'");
}

double tail_log_term(double degree, const TailConfig& c) {
  return std::log(degree / (static_cast<double>(c.d_min) - 0.5));
}

TailStats tail_stats(const DegreeSequence& d, const TailConfig& c) {
  c.validate();
  ExactSum t;
  std::int64_t n = 0;
  for (std::int64_t deg : d.degrees) {
    if (deg < c.d_min || deg > c.d_max) continue;
    t += tail_log_term(static_cast<double>(deg), c);
    ++n;
  }
  return TailStats{t.value(), n, c};
}

double zeta_trunc(double alpha, const TailConfig& c) {
  c.validate();
  CompensatedSum z;
  for (std::int64_t d = c.d_max; d >= c.d_min; --d) {
    z.add(std::pow(static_cast<double>(d), -alpha));
  }
  return z.value();
}

double pmf(std::int64_t d, double alpha, const TailConfig& c) {
  c.validate();
  if (d < c.d_min || d > c.d_max) {
    throw std::domain_error("degree " + std::to_string(d) +
                            " outside the power-law support");
  }
  return std::pow(static_cast<double>(d), -alpha) / zeta_trunc(alpha, c);
}

std::vector<double> pmf_table(double alpha, const TailConfig& c) {
  c.validate();
  const double z = zeta_trunc(alpha, c);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(c.d_max - c.d_min + 1));
  for (std::int64_t d = c.d_min; d <= c.d_max; ++d) {
    out.push_back(std::pow(static_cast<double>(d), -alpha) / z);
  }
  return out;
}

double log_likelihood(double t_disc, double n, const TailConfig& c,
                      double alpha) {
  const double z = zeta_trunc(alpha, c);
  if (!(z > 0.0) || !std::isfinite(z)) {
    return -std::numeric_limits<double>::infinity();
  }
  const double s = t_disc + n * std::log(static_cast<double>(c.d_min) - 0.5);
  return -alpha * s - n * std::log(z);
}

AlphaEstimate fit_discrete_approx(double t_disc, double n) {
  AlphaEstimate e;
  e.method = Method::kDiscreteApprox;
  e.alpha = 1.0 + n / t_disc;
  e.valid = t_disc > 0.0 && n > 0.0 && std::isfinite(e.alpha) && e.alpha >= 0.0;
  return e;
}

AlphaEstimate fit_discrete_approx(const TailStats& s) {
  return fit_discrete_approx(s.t_disc, static_cast<double>(s.n));
}

AlphaEstimate fit_numerical(double t_disc, double n, const TailConfig& c,
                            const FitOptions& options) {
  c.validate();
  AlphaEstimate e;
  e.method = Method::kNumericalOpt;
  if (!std::isfinite(t_disc) || !std::isfinite(n)) {
    e.alpha = std::numeric_limits<double>::quiet_NaN();
    return e;
  }

  // ln Z = -alpha ln d_min + log1p(sum over d > d_min of (d/d_min)^-alpha).
  // Factoring out the first term keeps the score smooth at large alpha,
  // where Z itself rounds to d_min^-alpha. The log ratios are reused across
  // the ~300 objective evaluations.
  std::vector<double> log_ratio;
  log_ratio.reserve(static_cast<std::size_t>(c.d_max - c.d_min));
  const double log_d_min = std::log(static_cast<double>(c.d_min));
  for (std::int64_t d = c.d_max; d > c.d_min; --d) {
    log_ratio.push_back(std::log(static_cast<double>(d)) - log_d_min);
  }
  const double s = t_disc + n * std::log(static_cast<double>(c.d_min) - 0.5);
  auto objective = [&](double alpha) {
    CompensatedSum rest;
    for (double lr : log_ratio) rest.add(std::exp(-alpha * lr));
    const double r = rest.value();
    if (!std::isfinite(r)) return -std::numeric_limits<double>::infinity();
    const double log_z = -alpha * log_d_min + std::log1p(r);
    return -alpha * s - n * log_z;
  };

  const ScanResult r = scan_and_refine(objective, options.scan);
  if (!r.found || r.flat) {
    e.alpha = std::numeric_limits<double>::quiet_NaN();
    return e;
  }
  e.alpha = r.argmax;
  e.valid = r.argmax >= 0.0;
  e.boundary_suspect = e.valid && r.at_upper;
  return e;
}

AlphaEstimate fit_numerical(const TailStats& s, const FitOptions& options) {
  return fit_numerical(s.t_disc, static_cast<double>(s.n), s.config, options);
}

}  // namespace dpalpha
