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

#include "dpalpha/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <thread>

#include "dpalpha/baseline.hpp"
#include "dpalpha/central.hpp"
#include "dpalpha/exact_sum.hpp"
#include "dpalpha/local.hpp"

namespace dpalpha {

Dataset load_dataset(const std::string& path) {
  EdgeListLoad loaded = load_edge_list_file(path);
  Dataset d;
  d.label = std::filesystem::path(path).filename().string();
  d.node_count = loaded.graph.node_count();
  d.degrees = degrees(loaded.graph);
  return d;
}

Dataset generate_dataset(const GeneratorSpec& spec) {
  Dataset d;
  d.degrees = sample_degree_sequence(spec);
  d.node_count = spec.n;
  std::string alpha = std::to_string(spec.alpha);
  alpha.erase(alpha.find_last_not_of('0') + 1);
  if (alpha.back() == '.') alpha.pop_back();
  d.label = "syn-a" + alpha + "-n" + std::to_string(spec.n) + "-d" +
            std::to_string(spec.config.d_min) + "-" +
            std::to_string(spec.config.d_max) + "-s" +
            std::to_string(spec.seed);
  return d;
}

TailConfig resolve_config(std::int64_t d_min, std::optional<std::int64_t> d_max,
                          std::int64_t node_count) {
  return TailConfig::make(d_min, d_max.value_or(node_count - 1));
}

void ExperimentSpec::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (eps.empty()) throw std::invalid_argument("at least one eps is required");
  for (double e : eps) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("eps values must be finite and positive");
    }
  }
  if (d_min.empty()) throw std::invalid_argument("at least one d_min is required");
  for (auto k : d_min) {
    if (k < 1) throw std::invalid_argument("d_min must be >= 1");
  }
  if (model == Model::kNonPrivate) {
    throw std::invalid_argument("experiments run a private model");
  }
  if (model == Model::kLocal && release == Release::kNone) {
    throw std::invalid_argument("local model requires --release degree|log");
  }
  if (method == Method::kBaseline && model != Model::kCentral) {
    throw std::invalid_argument("the baseline runs in the central model only");
  }
  if (model == Model::kCentral && release != Release::kNone) {
    throw std::invalid_argument("central model takes no release kind");
  }
  if (model == Model::kCentral && method != Method::kBaseline &&
      !(eps_split > 0.0 && eps_split < 1.0)) {
    throw std::invalid_argument("eps split must lie in (0, 1)");
  }
}

AlphaEstimate run_pipeline(const DegreeSequence& d, const TailConfig& c,
                           Model model, Method method, Release release,
                           double eps, double eps_split, TrialSeed seed,
                           NoiseMode mode) {
  switch (model) {
    case Model::kCentral:
      if (method == Method::kBaseline) {
        return baseline_estimate(d, c, eps, seed, mode);
      }
      if (method == Method::kDiscreteApprox) {
        return central_da(d, c, split_budget(eps, eps_split), seed, mode);
      }
      return central_no(d, c, split_budget(eps, eps_split), seed, mode);
    case Model::kLocal:
      if (method == Method::kBaseline) break;
      return local_estimate(d, c, to_report_kind(release), method, eps, seed,
                            mode);
    case Model::kNonPrivate:
      break;
  }
  throw std::invalid_argument("unsupported model/method combination");
}

Aggregate aggregate_trials(std::span<const TrialRecord> trials) {
  Aggregate a;
  ExactSum alpha, l1_abs, l1_pct;
  std::vector<double> pct;
  for (const TrialRecord& t : trials) {
    if (!t.valid) {
      ++a.invalid_count;
      continue;
    }
    ++a.valid_count;
    alpha += t.alpha_hat;
    l1_abs += t.l1_abs;
    l1_pct += t.l1_pct;
    pct.push_back(t.l1_pct);
  }
  if (a.valid_count == 0) return a;
  const auto count = static_cast<double>(a.valid_count);
  a.mean_alpha = alpha.value() / count;
  a.mean_l1_abs = l1_abs.value() / count;
  const double mean = l1_pct.value() / count;
  a.mean_l1_pct = mean;
  if (a.valid_count >= 2) {
    ExactSum squares;
    for (double p : pct) squares += (p - mean) * (p - mean);
    a.std_l1_pct = std::sqrt(squares.value() / (count - 1.0));
  }
  return a;
}

namespace {

unsigned worker_count(int requested, int trials) {
  unsigned n = requested > 0 ? static_cast<unsigned>(requested)
                             : std::max(1u, std::thread::hardware_concurrency());
  return std::min<unsigned>(n, static_cast<unsigned>(trials));
}

TrialRecord run_trial(const Dataset& data, const CellResults& cell,
                      const ExperimentSpec& spec, int trial) {
  const TrialSeed seed =
      trial_seed(spec.base_seed, static_cast<std::uint64_t>(trial));
  const AlphaEstimate e =
      run_pipeline(data.degrees, cell.config, cell.model, cell.method,
                   cell.release, cell.eps, spec.eps_split, seed, spec.noise);
  TrialRecord r;
  r.trial = trial;
  r.seed = seed.value;
  r.alpha_hat = e.alpha;
  r.valid = e.valid;
  r.l1_abs = std::abs(e.alpha - cell.alpha_ref);
  r.l1_pct = 100.0 * r.l1_abs / cell.alpha_ref;
  return r;
}

}  // namespace

TrialResults run_experiment(const Dataset& data, const ExperimentSpec& spec) {
  spec.validate();
  TrialResults results;
  std::map<std::int64_t, double> reference;  // by d_min
  for (std::int64_t d_min : spec.d_min) {
    const TailConfig config = resolve_config(d_min, spec.d_max, data.node_count);
    if (!reference.contains(d_min)) {
      // A non-finite reference (e.g. an empty tail) propagates NaN l1 values.
      reference[d_min] = fit_numerical(tail_stats(data.degrees, config)).alpha;
    }
    for (double eps : spec.eps) {
      CellResults cell;
      cell.dataset = data.label;
      cell.model = spec.model;
      cell.method = spec.method;
      cell.release = spec.model == Model::kLocal ? spec.release : Release::kNone;
      cell.eps = eps;
      if (spec.model == Model::kCentral && spec.method != Method::kBaseline) {
        cell.budget = split_budget(eps, spec.eps_split);
      }
      cell.config = config;
      cell.alpha_ref = reference[d_min];
      cell.trials.resize(static_cast<std::size_t>(spec.trials));

      std::atomic<int> next{0};
      std::exception_ptr failure;
      std::atomic<bool> failed{false};
      auto work = [&] {
        for (int t = next++; t < spec.trials && !failed; t = next++) {
          try {
            cell.trials[static_cast<std::size_t>(t)] =
                run_trial(data, cell, spec, t);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      };
      {
        std::vector<std::jthread> pool;
        const unsigned workers = worker_count(spec.threads, spec.trials);
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
      }
      if (failure) std::rethrow_exception(failure);
      cell.aggregate = aggregate_trials(cell.trials);
      results.cells.push_back(std::move(cell));
    }
  }
  return results;
}

}  // namespace dpalpha
