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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpalpha/baseline.hpp"
#include "dpalpha/central.hpp"
#include "dpalpha/graph.hpp"
#include "dpalpha/harness.hpp"
#include "dpalpha/io_error.hpp"
#include "dpalpha/local.hpp"
#include "dpalpha/mechanisms.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/syngen.hpp"

namespace py = pybind11;
using namespace dpalpha;

namespace {

DegreeSequence as_degrees(const std::vector<std::int64_t>& d) { return {d}; }

NoiseMode mode_of(bool noise) { return noise ? NoiseMode::kOn : NoiseMode::kOff; }

py::dict aggregate_dict(const CellResults& c) {
  py::dict out;
  out["dataset"] = c.dataset;
  out["model"] = std::string(to_string(c.model));
  out["method"] = std::string(to_string(c.method));
  out["release"] = std::string(to_string(c.release));
  out["eps"] = c.eps;
  out["d_min"] = c.config.d_min;
  out["d_max"] = c.config.d_max;
  out["alpha_ref"] = c.alpha_ref;
  out["mean_alpha"] = c.aggregate.mean_alpha;
  out["mean_l1_abs"] = c.aggregate.mean_l1_abs;
  out["mean_l1_pct"] = c.aggregate.mean_l1_pct;
  out["std_l1_pct"] = c.aggregate.std_l1_pct;
  out["valid_count"] = c.aggregate.valid_count;
  out["invalid_count"] = c.aggregate.invalid_count;
  std::vector<std::optional<double>> alphas;
  for (const TrialRecord& t : c.trials) {
    alphas.push_back(t.valid ? std::optional<double>(t.alpha_hat) : std::nullopt);
  }
  out["trial_alpha"] = alphas;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Power-law exponent estimation under edge differential privacy";

  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ProtocolError>(m, "ProtocolError", PyExc_RuntimeError);

  py::class_<TailConfig>(m, "TailConfig")
      .def(py::init(&TailConfig::make), py::arg("d_min"), py::arg("d_max"))
      .def_readonly("d_min", &TailConfig::d_min)
      .def_readonly("d_max", &TailConfig::d_max)
      .def("__repr__", [](const TailConfig& c) {
        return "TailConfig(d_min=" + std::to_string(c.d_min) +
               ", d_max=" + std::to_string(c.d_max) + ")";
      });

  py::class_<TailStats>(m, "TailStats")
      .def_readonly("t_disc", &TailStats::t_disc)
      .def_readonly("n", &TailStats::n)
      .def_readonly("config", &TailStats::config);

  py::class_<AlphaEstimate>(m, "AlphaEstimate")
      .def_readonly("alpha", &AlphaEstimate::alpha)
      .def_readonly("valid", &AlphaEstimate::valid)
      .def_readonly("boundary_suspect", &AlphaEstimate::boundary_suspect)
      .def_readonly("seed", &AlphaEstimate::seed)
      .def_property_readonly("method", [](const AlphaEstimate& e) {
        return std::string(to_string(e.method));
      })
      .def_property_readonly("model", [](const AlphaEstimate& e) {
        return std::string(to_string(e.model));
      })
      .def_property_readonly("release", [](const AlphaEstimate& e) {
        return std::string(to_string(e.release));
      })
      .def("__repr__", [](const AlphaEstimate& e) {
        return "AlphaEstimate(alpha=" + std::to_string(e.alpha) +
               ", valid=" + (e.valid ? "True" : "False") + ")";
      });

  py::class_<PrivacyBudget>(m, "PrivacyBudget")
      .def_readonly("eps", &PrivacyBudget::eps)
      .def_readonly("eps_t", &PrivacyBudget::eps_t)
      .def_readonly("eps_n", &PrivacyBudget::eps_n);

  // Graph input.
  m.def(
      "load_degrees",
      [](const std::string& path) {
        return degrees(load_edge_list_file(path).graph).degrees;
      },
      py::arg("path"), "Degree sequence of an edge-list file.");
  m.def(
      "degrees_from_edges",
      [](std::int64_t n, const std::vector<Edge>& edges) {
        return degrees(Graph(n, edges)).degrees;
      },
      py::arg("node_count"), py::arg("edges"));

  // Non-private core.
  m.def(
      "tail_stats",
      [](const std::vector<std::int64_t>& d, const TailConfig& c) {
        return tail_stats(as_degrees(d), c);
      },
      py::arg("degrees"), py::arg("config"));
  m.def("zeta_trunc", &zeta_trunc, py::arg("alpha"), py::arg("config"));
  m.def("pmf", &pmf, py::arg("d"), py::arg("alpha"), py::arg("config"));
  m.def("log_likelihood", &log_likelihood, py::arg("t_disc"), py::arg("n"),
        py::arg("config"), py::arg("alpha"));
  m.def("fit_discrete_approx",
        py::overload_cast<double, double>(&fit_discrete_approx),
        py::arg("t_disc"), py::arg("n"));
  m.def(
      "fit_numerical",
      [](double t, double n, const TailConfig& c) { return fit_numerical(t, n, c); },
      py::arg("t_disc"), py::arg("n"), py::arg("config"));

  // Mechanisms.
  m.def("split_budget", &split_budget, py::arg("eps"),
        py::arg("fraction_t") = 0.5);
  m.def("sensitivity_t_disc", &sensitivity_t_disc, py::arg("d_min"));
  m.def("sensitivity_log_stat", &sensitivity_log_stat, py::arg("d_min"));
  m.def("laplace_from_uniform", &laplace_from_uniform, py::arg("scale"),
        py::arg("u"));

  // Private estimators.
  m.def(
      "central_estimate",
      [](const std::vector<std::int64_t>& d, const TailConfig& c,
         const std::string& method, double eps, double eps_split,
         std::uint64_t seed, bool noise) {
        const PrivacyBudget b = split_budget(eps, eps_split);
        const Method mth = parse_method(method);
        if (mth == Method::kBaseline) {
          return baseline_estimate(as_degrees(d), c, eps, TrialSeed{seed},
                                   mode_of(noise));
        }
        return mth == Method::kDiscreteApprox
                   ? central_da(as_degrees(d), c, b, TrialSeed{seed}, mode_of(noise))
                   : central_no(as_degrees(d), c, b, TrialSeed{seed}, mode_of(noise));
      },
      py::arg("degrees"), py::arg("config"), py::arg("method") = "no",
      py::arg("eps") = 1.0, py::arg("eps_split") = 0.5, py::arg("seed") = 0,
      py::arg("noise") = true);
  m.def(
      "local_estimate",
      [](const std::vector<std::int64_t>& d, const TailConfig& c,
         const std::string& release, const std::string& method, double eps,
         std::uint64_t seed, bool noise) {
        return local_estimate(as_degrees(d), c,
                              to_report_kind(parse_release(release)),
                              parse_method(method), eps, TrialSeed{seed},
                              mode_of(noise));
      },
      py::arg("degrees"), py::arg("config"), py::arg("release") = "degree",
      py::arg("method") = "no", py::arg("eps") = 1.0, py::arg("seed") = 0,
      py::arg("noise") = true);
  m.def(
      "isotonic_regression",
      [](const std::vector<double>& v) { return isotonic_regression(v); },
      py::arg("values"));

  // Synthetic data.
  m.def(
      "sample_degrees",
      [](std::int64_t n, double alpha, std::int64_t d_min, std::int64_t d_max,
         std::uint64_t seed, bool realize) {
        GeneratorSpec g;
        g.n = n;
        g.alpha = alpha;
        g.config = TailConfig::make(d_min, d_max);
        g.seed = seed;
        g.realize = realize;
        return sample_degree_sequence(g).degrees;
      },
      py::arg("n"), py::arg("alpha") = 2.5, py::arg("d_min") = 1,
      py::arg("d_max") = 1000, py::arg("seed") = 1, py::arg("realize") = false);

  // Experiments.
  m.def(
      "run_experiment",
      [](const std::vector<std::int64_t>& d, const std::string& model,
         const std::string& method, const std::string& release,
         const std::vector<double>& eps, const std::vector<std::int64_t>& d_min,
         std::optional<std::int64_t> d_max, int trials, std::uint64_t seed,
         int threads) {
        Dataset data;
        data.label = "python";
        data.degrees = as_degrees(d);
        data.node_count = static_cast<std::int64_t>(d.size());
        ExperimentSpec spec;
        spec.model = parse_model(model);
        spec.method = parse_method(method);
        spec.release = parse_release(release);
        spec.eps = eps;
        spec.d_min = d_min;
        spec.d_max = d_max;
        spec.trials = trials;
        spec.base_seed = seed;
        spec.threads = threads;
        TrialResults r;
        {
          py::gil_scoped_release unlocked;
          r = run_experiment(data, spec);
        }
        py::list cells;
        for (const CellResults& c : r.cells) cells.append(aggregate_dict(c));
        return cells;
      },
      py::arg("degrees"), py::arg("model") = "central", py::arg("method") = "no",
      py::arg("release") = "none", py::arg("eps") = std::vector<double>{1.0},
      py::arg("d_min") = std::vector<std::int64_t>{1},
      py::arg("d_max") = std::nullopt, py::arg("trials") = 20,
      py::arg("seed") = 0, py::arg("threads") = 0);

  m.def(
      "sens_check",
      [](int max_nodes, const std::vector<std::int64_t>& d_mins) {
        const SensCheckReport r = sens_check(max_nodes, d_mins);
        py::dict out;
        out["graphs"] = r.graphs;
        out["neighbor_pairs"] = r.neighbor_pairs;
        out["violations"] = r.violations;
        py::list entries;
        for (const auto& e : r.entries) {
          py::dict x;
          x["d_min"] = e.config.d_min;
          x["t_disc"] = py::make_tuple(e.t_disc.observed_max, e.t_disc.bound);
          x["tail_count"] =
              py::make_tuple(e.tail_count.observed_max, e.tail_count.bound);
          x["log_stat"] = py::make_tuple(e.log_stat.observed_max, e.log_stat.bound);
          x["degree"] = py::make_tuple(e.degree.observed_max, e.degree.bound);
          entries.append(x);
        }
        out["entries"] = entries;
        return out;
      },
      py::arg("max_nodes") = 5,
      py::arg("d_mins") = std::vector<std::int64_t>{1, 2, 3});
}
