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

// dpalpha: command-line front end.
//
//   fit         non-private fit
//   dp-fit      central edge-DP (DA / NO)
//   ldp-fit     local edge-DP (DA / NO with degree or log release)
//   baseline    degree-distribution release baseline
//   gen         write a synthetic graph as an edge list
//   sweep       run several variants over eps / d_min lists
//   sens-check  exhaustive check of the sensitivity bounds
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 sens-check violation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dpalpha/graph.hpp"
#include "dpalpha/harness.hpp"
#include "dpalpha/io_error.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/syngen.hpp"

namespace {

using namespace dpalpha;

constexpr int kUsageError = 1;
constexpr int kIoError = 2;
constexpr int kSensViolation = 3;

struct DataOptions {
  std::string input;
  std::string gen;
  std::string d_max = "auto";
  std::vector<std::int64_t> d_min{1};
};

struct RunOptions {
  std::vector<double> eps{1.0};
  double eps_split = 0.5;
  std::string method = "no";
  std::string release;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string plot;
  bool noise_off = false;
  int threads = 0;
};

void add_data_options(CLI::App* cmd, DataOptions& o) {
  auto* in = cmd->add_option("--input", o.input, "Edge-list file");
  auto* gen = cmd->add_option(
      "--gen", o.gen, "Generator spec, e.g. alpha=2.5,n=100000,dmin=1,dmax=1000,seed=1");
  in->excludes(gen);
  cmd->add_option("--dmin", o.d_min, "Tail lower bound(s)")->delimiter(',');
  cmd->add_option("--dmax", o.d_max, "Tail upper bound or 'auto' (n - 1)");
}

void add_run_options(CLI::App* cmd, RunOptions& o, bool with_split,
                     bool with_method, bool with_release) {
  cmd->add_option("--eps", o.eps, "Privacy budget(s)")->delimiter(',');
  if (with_split) {
    cmd->add_option("--eps-split", o.eps_split,
                    "Fraction of eps spent on T_disc (central)");
  }
  if (with_method) cmd->add_option("--method", o.method, "da | no");
  if (with_release) {
    cmd->add_option("--release", o.release, "degree | log")->required();
  }
  cmd->add_option("--trials", o.trials, "Trials per cell");
  cmd->add_option("--seed", o.seed, "Base seed; trial t uses seed + t");
  cmd->add_option("--out", o.out, "CSV output path (default stdout)");
  cmd->add_option("--plot", o.plot, "SVG plot path");
  cmd->add_flag("--noise-off", o.noise_off, "Diagnostic: skip all noise");
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

Dataset load_data(const DataOptions& o) {
  if (!o.input.empty()) return load_dataset(o.input);
  if (!o.gen.empty()) return generate_dataset(parse_generator_spec(o.gen));
  throw std::invalid_argument("one of --input or --gen is required");
}

std::optional<std::int64_t> parse_dmax(const std::string& s) {
  if (s == "auto") return std::nullopt;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("--dmax expects an integer or 'auto'");
}

void emit(const TrialResults& results, const RunOptions& o) {
  if (o.out.empty()) {
    write_csv(std::cout, results);
  } else {
    write_csv_file(o.out, results);
  }
  if (!o.plot.empty()) write_svg_file(o.plot, results);
}

ExperimentSpec make_spec(const DataOptions& d, const RunOptions& o, Model model,
                         Method method, Release release) {
  ExperimentSpec spec;
  spec.model = model;
  spec.method = method;
  spec.release = release;
  spec.eps = o.eps;
  spec.d_min = d.d_min;
  spec.d_max = parse_dmax(d.d_max);
  spec.trials = o.trials;
  spec.base_seed = o.seed;
  spec.eps_split = o.eps_split;
  spec.noise = o.noise_off ? NoiseMode::kOff : NoiseMode::kOn;
  spec.threads = o.threads;
  return spec;
}

int cmd_fit(const DataOptions& d, const std::string& method_name,
            const std::string& out_path) {
  const Method method = parse_method(method_name);
  if (method == Method::kBaseline) {
    throw std::invalid_argument("fit takes --method da|no");
  }
  const Dataset data = load_data(d);
  std::ostringstream out;
  out << "dataset,method,dmin,dmax,n_tail,t_disc,alpha_hat,valid,"
         "boundary_suspect\n";
  for (std::int64_t d_min : d.d_min) {
    const TailConfig c =
        resolve_config(d_min, parse_dmax(d.d_max), data.node_count);
    const TailStats s = tail_stats(data.degrees, c);
    const AlphaEstimate e = method == Method::kDiscreteApprox
                                ? fit_discrete_approx(s)
                                : fit_numerical(s);
    char row[256];
    std::snprintf(row, sizeof(row), "%s,%s,%lld,%lld,%lld,%.17g,%.17g,%d,%d\n",
                  data.label.c_str(), std::string(to_string(method)).c_str(),
                  static_cast<long long>(c.d_min),
                  static_cast<long long>(c.d_max),
                  static_cast<long long>(s.n), s.t_disc, e.alpha,
                  e.valid ? 1 : 0, e.boundary_suspect ? 1 : 0);
    out << row;
  }
  if (out_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write " + out_path);
    f << out.str();
  }
  return 0;
}

int cmd_gen(const std::string& gen, const std::string& out_path) {
  GeneratorSpec spec = parse_generator_spec(gen);
  spec.realize = true;
  NoiseStream rng(RngSeed{spec.seed, streams::kGenerator});
  const DegreeSequence d = sample_degree_sequence(spec, rng);
  NoiseStream match_rng(RngSeed{spec.seed, streams::kRealize});
  const RealizedGraph g = realize_graph(d, match_rng);
  std::cerr << "gen: " << g.graph.node_count() << " nodes, "
            << g.graph.edge_count() << " edges; erased " << g.erased_self_loops
            << " self-loops and " << g.erased_multi_edges
            << " multi-edges (" << 100.0 * g.erased_fraction()
            << "% of stubs), " << g.nodes_changed << " nodes changed degree\n";
  if (out_path.empty()) {
    write_edge_list(std::cout, g.graph);
  } else {
    std::ofstream f(out_path);
    if (!f) throw IoError("cannot write " + out_path);
    f << "# nodes " << g.graph.node_count() << " edges "
      << g.graph.edge_count() << '\n';
    write_edge_list(f, g.graph);
    if (!f) throw IoError("write failed for " + out_path);
  }
  return 0;
}

template <typename T>
std::vector<T> parse_list(const std::vector<std::string>& names,
                          T (*parse)(std::string_view)) {
  std::vector<T> out;
  for (const auto& n : names) out.push_back(parse(n));
  return out;
}

int cmd_sweep(const DataOptions& d, const RunOptions& o,
              const std::vector<std::string>& models,
              const std::vector<std::string>& methods,
              const std::vector<std::string>& releases) {
  const Dataset data = load_data(d);
  TrialResults all;
  for (Model model : parse_list(models, parse_model)) {
    for (Method method : parse_list(methods, parse_method)) {
      if (model == Model::kCentral) {
        const ExperimentSpec spec =
            make_spec(d, o, model, method, Release::kNone);
        TrialResults r = run_experiment(data, spec);
        std::move(r.cells.begin(), r.cells.end(), std::back_inserter(all.cells));
        continue;
      }
      if (method == Method::kBaseline) continue;
      for (Release release : parse_list(releases, parse_release)) {
        const ExperimentSpec spec = make_spec(d, o, model, method, release);
        TrialResults r = run_experiment(data, spec);
        std::move(r.cells.begin(), r.cells.end(), std::back_inserter(all.cells));
      }
    }
  }
  emit(all, o);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-DP estimation of the power-law scaling parameter"};
  app.require_subcommand(1);

  DataOptions fit_data;
  std::string fit_method = "no";
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "Non-private fit");
  add_data_options(fit, fit_data);
  fit->add_option("--method", fit_method, "da | no");
  fit->add_option("--out", fit_out, "Output path (default stdout)");

  DataOptions dp_data;
  RunOptions dp_run;
  auto* dp = app.add_subcommand("dp-fit", "Central edge-DP estimate");
  add_data_options(dp, dp_data);
  add_run_options(dp, dp_run, true, true, false);

  DataOptions ldp_data;
  RunOptions ldp_run;
  auto* ldp = app.add_subcommand("ldp-fit", "Local edge-DP estimate");
  add_data_options(ldp, ldp_data);
  add_run_options(ldp, ldp_run, false, true, true);

  DataOptions base_data;
  RunOptions base_run;
  auto* base = app.add_subcommand("baseline", "Degree-distribution baseline");
  add_data_options(base, base_data);
  add_run_options(base, base_run, false, false, false);

  std::string gen_spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a synthetic graph");
  gen->add_option("--gen", gen_spec, "Generator spec")->required();
  gen->add_option("--out", gen_out, "Edge-list path (default stdout)");

  DataOptions sweep_data;
  RunOptions sweep_run;
  sweep_run.trials = 20;
  std::vector<std::string> sweep_models{"central", "local"};
  std::vector<std::string> sweep_methods{"da", "no"};
  std::vector<std::string> sweep_releases{"degree", "log"};
  auto* sweep = app.add_subcommand("sweep", "Run variants over eps / d_min");
  add_data_options(sweep, sweep_data);
  add_run_options(sweep, sweep_run, true, false, false);
  sweep->add_option("--model", sweep_models, "central,local")->delimiter(',');
  sweep->add_option("--method", sweep_methods, "da,no,baseline")->delimiter(',');
  sweep->add_option("--release", sweep_releases, "degree,log")->delimiter(',');

  int sens_nodes = 5;
  std::vector<std::int64_t> sens_dmin{1, 2, 3};
  std::string sens_dmax = "auto";
  auto* sens = app.add_subcommand("sens-check", "Exhaustive sensitivity check");
  sens->add_option("--max-nodes", sens_nodes, "Nodes per graph (2..6)");
  sens->add_option("--dmin", sens_dmin, "d_min values")->delimiter(',');
  sens->add_option("--dmax", sens_dmax, "d_max or 'auto' (max-nodes - 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*fit) return cmd_fit(fit_data, fit_method, fit_out);
    if (*dp) {
      emit(run_experiment(load_data(dp_data),
                          make_spec(dp_data, dp_run, Model::kCentral,
                                    parse_method(dp_run.method), Release::kNone)),
           dp_run);
      return 0;
    }
    if (*ldp) {
      emit(run_experiment(load_data(ldp_data),
                          make_spec(ldp_data, ldp_run, Model::kLocal,
                                    parse_method(ldp_run.method),
                                    parse_release(ldp_run.release))),
           ldp_run);
      return 0;
    }
    if (*base) {
      emit(run_experiment(load_data(base_data),
                          make_spec(base_data, base_run, Model::kCentral,
                                    Method::kBaseline, Release::kNone)),
           base_run);
      return 0;
    }
    if (*gen) return cmd_gen(gen_spec, gen_out);
    if (*sweep) {
      return cmd_sweep(sweep_data, sweep_run, sweep_models, sweep_methods,
                       sweep_releases);
    }
    if (*sens) {
      const SensCheckReport report =
          sens_check(sens_nodes, sens_dmin, parse_dmax(sens_dmax));
      print_sens_report(std::cout, report);
      return report.violations == 0 ? 0 : kSensViolation;
    }
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
