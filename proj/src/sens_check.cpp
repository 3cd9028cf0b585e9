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
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "dpalpha/harness.hpp"
#include "dpalpha/local.hpp"
#include "dpalpha/mechanisms.hpp"

namespace dpalpha {

namespace {

struct GraphStats {
  double t_disc;
  std::int64_t n;
  std::vector<double> log_stat;
  std::vector<std::int64_t> degree;
};

std::vector<Edge> edges_of(std::uint32_t mask, const std::vector<Edge>& all) {
  std::vector<Edge> out;
  for (std::size_t e = 0; e < all.size(); ++e) {
    if (mask & (1u << e)) out.push_back(all[e]);
  }
  return out;
}

void update(SensQuantity& q, double change) {
  q.observed_max = std::max(q.observed_max, change);
}

}  // namespace

SensCheckReport sens_check(int max_nodes, std::span<const std::int64_t> d_mins,
                           std::optional<std::int64_t> d_max) {
  if (max_nodes < 2 || max_nodes > 6) {
    throw std::invalid_argument("sens-check supports 2..6 nodes");
  }
  std::vector<Edge> all;
  for (NodeId u = 0; u < max_nodes; ++u) {
    for (NodeId v = u + 1; v < max_nodes; ++v) all.emplace_back(u, v);
  }
  const std::uint32_t graph_count = 1u << all.size();

  SensCheckReport report;
  report.max_nodes = max_nodes;
  report.graphs = graph_count;
  report.neighbor_pairs = static_cast<std::size_t>(graph_count) * all.size() / 2;

  // Degrees of every graph once; statistics per d_min below.
  std::vector<DegreeSequence> deg(graph_count);
  for (std::uint32_t mask = 0; mask < graph_count; ++mask) {
    deg[mask] = degrees(Graph(max_nodes, edges_of(mask, all)));
  }

  for (std::int64_t d_min : d_mins) {
    SensCheckEntry entry;
    entry.config = TailConfig::make(d_min, d_max.value_or(max_nodes - 1));
    entry.t_disc.bound = sensitivity_t_disc(d_min);
    entry.tail_count.bound = sensitivity_n();
    entry.log_stat.bound = sensitivity_log_stat(d_min);
    entry.degree.bound = sensitivity_degree();

    std::vector<GraphStats> stats(graph_count);
    for (std::uint32_t mask = 0; mask < graph_count; ++mask) {
      const TailStats ts = tail_stats(deg[mask], entry.config);
      GraphStats& g = stats[mask];
      g.t_disc = ts.t_disc;
      g.n = ts.n;
      g.degree = deg[mask].degrees;
      for (std::int64_t d : g.degree) {
        g.log_stat.push_back(log_contribution(d, entry.config));
      }
    }

    for (std::uint32_t mask = 0; mask < graph_count; ++mask) {
      for (std::size_t e = 0; e < all.size(); ++e) {
        if (mask & (1u << e)) continue;
        const GraphStats& a = stats[mask];
        const GraphStats& b = stats[mask | (1u << e)];
        update(entry.t_disc, std::abs(a.t_disc - b.t_disc));
        const double dn = std::abs(static_cast<double>(a.n - b.n));
        update(entry.tail_count, dn);
        if (dn >= 2.0 && !entry.tail_count_witness) {
          entry.tail_count_witness = SensWitness{edges_of(mask, all), all[e], dn};
        }
        for (int v = 0; v < max_nodes; ++v) {
          update(entry.log_stat, std::abs(a.log_stat[v] - b.log_stat[v]));
          const double dd = std::abs(static_cast<double>(a.degree[v] - b.degree[v]));
          update(entry.degree, dd);
          if (dd >= 1.0 && !entry.degree_witness) {
            entry.degree_witness = SensWitness{edges_of(mask, all), all[e], dd};
          }
        }
      }
    }
    for (const SensQuantity* q : {&entry.t_disc, &entry.tail_count,
                                  &entry.log_stat, &entry.degree}) {
      if (q->violated()) ++entry.violations;
    }
    report.violations += entry.violations;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

void print_witness(std::ostream& out, const char* what,
                   const std::optional<SensWitness>& w) {
  if (!w) {
    out << "  " << what << " witness: none\n";
    return;
  }
  out << "  " << what << " witness: edges {";
  for (std::size_t i = 0; i < w->graph.size(); ++i) {
    out << (i ? "," : "") << '(' << w->graph[i].first << ' '
        << w->graph[i].second << ')';
  }
  out << "} + (" << w->toggled.first << ' ' << w->toggled.second
      << ") changes it by " << w->change << '\n';
}

void print_quantity(std::ostream& out, const char* name, const SensQuantity& q) {
  char line[160];
  std::snprintf(line, sizeof(line), "  %-10s observed %.12f  bound %.12f  %s\n",
                name, q.observed_max, q.bound, q.violated() ? "VIOLATED" : "ok");
  out << line;
}

}  // namespace

void print_sens_report(std::ostream& out, const SensCheckReport& report) {
  out << "sens-check: " << report.graphs << " graphs on " << report.max_nodes
      << " nodes, " << report.neighbor_pairs << " neighbor pairs\n";
  for (const SensCheckEntry& e : report.entries) {
    out << "d_min=" << e.config.d_min << " d_max=" << e.config.d_max << '\n';
    print_quantity(out, "T_disc", e.t_disc);
    print_quantity(out, "N", e.tail_count);
    print_quantity(out, "log_stat", e.log_stat);
    print_quantity(out, "degree", e.degree);
    print_witness(out, "|dN|=2", e.tail_count_witness);
    print_witness(out, "|dd_v|=1", e.degree_witness);
  }
  out << (report.violations == 0 ? "PASS" : "FAIL") << ": "
      << report.violations << " violation(s)\n";
}

}  // namespace dpalpha
