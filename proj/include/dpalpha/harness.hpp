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

#ifndef DPALPHA_HARNESS_HPP_
#define DPALPHA_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpalpha/graph.hpp"
#include "dpalpha/mechanisms.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/rng.hpp"
#include "dpalpha/syngen.hpp"

namespace dpalpha {

struct Dataset {
  std::string label;
  DegreeSequence degrees;
  std::int64_t node_count = 0;
};

// Loads an edge-list file; the label is the file name. Throws IoError or
// ParseError.
Dataset load_dataset(const std::string& path);
Dataset generate_dataset(const GeneratorSpec& spec);

// Resolves d_max: the override if present, else node_count - 1 (the largest
// degree a simple graph admits).
TailConfig resolve_config(std::int64_t d_min, std::optional<std::int64_t> d_max,
                          std::int64_t node_count);

struct ExperimentSpec {
  Model model = Model::kCentral;
  Method method = Method::kNumericalOpt;
  Release release = Release::kNone;
  std::vector<double> eps{1.0};
  std::vector<std::int64_t> d_min{1};
  std::optional<std::int64_t> d_max;  // nullopt: auto
  int trials = 20;
  std::uint64_t base_seed = 0;
  double eps_split = 0.5;  // central only
  NoiseMode noise = NoiseMode::kOn;
  int threads = 0;  // 0: hardware concurrency

  // Throws std::invalid_argument when the combination is not runnable.
  void validate() const;
};

// One private estimate for a single trial. Dispatches on model / method /
// release.
AlphaEstimate run_pipeline(const DegreeSequence& d, const TailConfig& c,
                           Model model, Method method, Release release,
                           double eps, double eps_split, TrialSeed seed,
                           NoiseMode mode = NoiseMode::kOn);

struct TrialRecord {
  int trial = 0;
  std::uint64_t seed = 0;
  double alpha_hat = 0.0;
  bool valid = false;
  double l1_abs = 0.0;
  double l1_pct = 0.0;
};

// Statistics over valid trials only. Means are absent when no trial is
// valid; the standard deviation (n - 1 denominator) needs two.
struct Aggregate {
  std::optional<double> mean_alpha;
  std::optional<double> mean_l1_abs;
  std::optional<double> mean_l1_pct;
  std::optional<double> std_l1_pct;
  int valid_count = 0;
  int invalid_count = 0;
};

Aggregate aggregate_trials(std::span<const TrialRecord> trials);

struct CellResults {
  std::string dataset;
  Model model = Model::kCentral;
  Method method = Method::kNumericalOpt;
  Release release = Release::kNone;
  double eps = 0.0;
  std::optional<PrivacyBudget> budget;
  TailConfig config;
  double alpha_ref = 0.0;  // non-private numerical fit on the same data
  std::vector<TrialRecord> trials;
  Aggregate aggregate;
};

struct TrialResults {
  std::vector<CellResults> cells;
};

// Runs spec.trials seeded trials per (eps, d_min) cell. Trial t uses
// trial_seed(base_seed, t); results are identical for any thread count.
TrialResults run_experiment(const Dataset& data, const ExperimentSpec& spec);

// CSV: one row per trial plus one aggregate row (trial = seed = -1) per cell.
// Absent aggregates are written as "--". Throws std::invalid_argument for
// results without trials.
void write_csv(std::ostream& out, const TrialResults& results);
void write_csv_file(const std::string& path, const TrialResults& results);

struct CsvAggregateRow {
  std::string dataset, model, method, release;
  double eps = 0.0;
  std::int64_t d_min = 0, d_max = 0;
  double alpha_ref = 0.0;
  std::optional<double> mean_alpha, mean_l1_abs, mean_l1_pct, std_l1_pct;
  int invalid_count = 0;
};

std::vector<CsvAggregateRow> read_csv_aggregates(std::istream& in);

// Static SVG chart of mean l1 (%) with +-1 std error bars: lines over eps
// when several eps values are present, otherwise grouped bars per variant.
void write_svg_plot(std::ostream& out, const TrialResults& results);
void write_svg_file(const std::string& path, const TrialResults& results);

// Exhaustive check of the sensitivity bounds: every graph on max_nodes nodes
// and every single-edge toggle.
struct SensQuantity {
  double observed_max = 0.0;
  double bound = 0.0;
  bool violated() const { return observed_max > bound + 1e-12; }
};

struct SensWitness {
  std::vector<Edge> graph;  // the sparser graph of the pair
  Edge toggled;
  double change = 0.0;
};

struct SensCheckEntry {
  TailConfig config;
  SensQuantity t_disc, tail_count, log_stat, degree;
  std::optional<SensWitness> tail_count_witness;  // |dN| reaching 2
  std::optional<SensWitness> degree_witness;      // |d_v| change reaching 1
  std::size_t violations = 0;
};

struct SensCheckReport {
  int max_nodes = 0;
  std::size_t graphs = 0;
  std::size_t neighbor_pairs = 0;
  std::vector<SensCheckEntry> entries;
  std::size_t violations = 0;
};

// Throws std::invalid_argument unless 2 <= max_nodes <= 6. d_max defaults to
// max_nodes - 1.
SensCheckReport sens_check(int max_nodes, std::span<const std::int64_t> d_mins,
                           std::optional<std::int64_t> d_max = std::nullopt);
void print_sens_report(std::ostream& out, const SensCheckReport& report);

}  // namespace dpalpha

#endif  // DPALPHA_HARNESS_HPP_
