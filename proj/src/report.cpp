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
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dpalpha/harness.hpp"
#include "dpalpha/io_error.hpp"

namespace dpalpha {

namespace {

constexpr const char* kAbsent = "--";

constexpr const char* kColumns[] = {
    "dataset", "model",  "method",    "release",   "eps",
    "eps_t",   "eps_n",  "dmin",      "dmax",      "trial",
    "seed",    "alpha_ref", "alpha_hat", "valid",  "l1_abs",
    "l1_pct",  "std_l1_pct", "invalid_count"};

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string opt_num(const std::optional<double>& v) {
  return v ? num(*v) : std::string(kAbsent);
}

std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', '_');
  return s;
}

void write_cell_prefix(std::ostream& out, const CellResults& c) {
  out << csv_safe(c.dataset) << ',' << to_string(c.model) << ','
      << to_string(c.method) << ',' << to_string(c.release) << ','
      << num(c.eps) << ',';
  if (c.budget) {
    out << num(c.budget->eps_t) << ',' << num(c.budget->eps_n) << ',';
  } else {
    out << ",,";
  }
  out << c.config.d_min << ',' << c.config.d_max << ',';
}

}  // namespace

void write_csv(std::ostream& out, const TrialResults& results) {
  if (results.cells.empty()) throw std::invalid_argument("no results to write");
  for (const CellResults& c : results.cells) {
    if (c.trials.empty()) throw std::invalid_argument("cell without trials");
  }
  for (std::size_t i = 0; i < std::size(kColumns); ++i) {
    out << (i ? "," : "") << kColumns[i];
  }
  out << '\n';
  for (const CellResults& c : results.cells) {
    for (const TrialRecord& t : c.trials) {
      write_cell_prefix(out, c);
      out << t.trial << ',' << t.seed << ',' << num(c.alpha_ref) << ','
          << num(t.alpha_hat) << ',' << (t.valid ? 1 : 0) << ','
          << num(t.l1_abs) << ',' << num(t.l1_pct) << ",,\n";
    }
    const Aggregate& a = c.aggregate;
    write_cell_prefix(out, c);
    out << "-1,-1," << num(c.alpha_ref) << ',' << opt_num(a.mean_alpha) << ','
        << (a.valid_count > 0 ? 1 : 0) << ',' << opt_num(a.mean_l1_abs) << ','
        << opt_num(a.mean_l1_pct) << ',' << opt_num(a.std_l1_pct) << ','
        << a.invalid_count << '\n';
  }
}

void write_csv_file(const std::string& path, const TrialResults& results) {
  // Serialize first so that invalid input never leaves a file behind.
  std::ostringstream buffer;
  write_csv(buffer, results);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << buffer.str();
  if (!out) throw IoError("write failed for " + path);
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad number in CSV: '" + s + "'");
  }
  return v;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s == kAbsent || s.empty()) return std::nullopt;
  return parse_double(s);
}

}  // namespace

std::vector<CsvAggregateRow> read_csv_aggregates(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  const std::vector<std::string> header = split_csv(line);
  std::map<std::string, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
  for (const char* name : kColumns) {
    if (!col.contains(name)) {
      throw std::invalid_argument(std::string("CSV lacks column ") + name);
    }
  }
  std::vector<CsvAggregateRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> f = split_csv(line);
    if (f.size() != header.size()) {
      throw std::invalid_argument("ragged CSV row: " + line);
    }
    if (f[col["trial"]] != "-1") continue;
    CsvAggregateRow r;
    r.dataset = f[col["dataset"]];
    r.model = f[col["model"]];
    r.method = f[col["method"]];
    r.release = f[col["release"]];
    r.eps = parse_double(f[col["eps"]]);
    r.d_min = static_cast<std::int64_t>(parse_double(f[col["dmin"]]));
    r.d_max = static_cast<std::int64_t>(parse_double(f[col["dmax"]]));
    r.alpha_ref = parse_double(f[col["alpha_ref"]]);
    r.mean_alpha = parse_opt(f[col["alpha_hat"]]);
    r.mean_l1_abs = parse_opt(f[col["l1_abs"]]);
    r.mean_l1_pct = parse_opt(f[col["l1_pct"]]);
    r.std_l1_pct = parse_opt(f[col["std_l1_pct"]]);
    r.invalid_count = static_cast<int>(parse_double(f[col["invalid_count"]]));
    rows.push_back(std::move(r));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

struct Point {
  double eps;
  double mean;
  double std;
};

std::string variant_label(const CellResults& c) {
  std::string label;
  if (c.method == Method::kBaseline) {
    label = "Base";
  } else {
    label = c.method == Method::kDiscreteApprox ? "DA" : "NO";
    if (c.model == Model::kLocal) {
      label += c.release == Release::kDegree ? "/DR" : "/LR";
    } else {
      label += " (central)";
    }
  }
  return label + " dmin=" + std::to_string(c.config.d_min);
}

const char* kPalette[] = {"#1A80BB", "#E9C716", "#BC272D", "#A559AA",
                          "#8CCEE3", "#F55F74", "#0D7D87", "#555555"};

std::string fmt_tick(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

}  // namespace

void write_svg_plot(std::ostream& out, const TrialResults& results) {
  if (results.cells.empty()) throw std::invalid_argument("no results to plot");

  std::vector<std::string> order;
  std::map<std::string, std::vector<Point>> series;
  std::set<double> eps_values;
  for (const CellResults& c : results.cells) {
    const std::string label = variant_label(c);
    if (!series.contains(label)) order.push_back(label);
    auto& pts = series[label];
    eps_values.insert(c.eps);
    if (c.aggregate.mean_l1_pct && std::isfinite(*c.aggregate.mean_l1_pct)) {
      pts.push_back({c.eps, *c.aggregate.mean_l1_pct,
                     c.aggregate.std_l1_pct.value_or(0.0)});
    }
  }

  double y_max = 0.0;
  double y_min = INFINITY;
  for (const auto& [_, pts] : series) {
    for (const Point& p : pts) {
      y_max = std::max(y_max, p.mean + p.std);
      if (p.mean > 0.0) y_min = std::min(y_min, p.mean);
    }
  }
  if (!(y_max > 0.0)) y_max = 1.0;
  if (!std::isfinite(y_min)) y_min = y_max / 10.0;
  const bool log_y = y_max / y_min > 100.0;
  const double lo_exp = std::floor(std::log10(y_min));
  const double hi_exp = std::ceil(std::log10(y_max));

  constexpr double kWidth = 720, kHeight = 420;
  constexpr double kLeft = 70, kRight = 200, kTop = 30, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto y_of = [&](double v) {
    double f;
    if (log_y) {
      f = (std::log10(std::max(v, std::pow(10.0, lo_exp))) - lo_exp) /
          (hi_exp - lo_exp);
    } else {
      f = v / (y_max * 1.05);
    }
    return kTop + plot_h * (1.0 - std::clamp(f, 0.0, 1.0));
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\" "
      << "font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\""
      << kLeft + plot_w << "\" y2=\"" << kTop + plot_h
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
      << "\" y2=\"" << kTop + plot_h << "\" stroke=\"black\"/>\n";
  out << "<text x=\"18\" y=\"" << kTop + plot_h / 2
      << "\" transform=\"rotate(-90 18 " << kTop + plot_h / 2
      << ")\" text-anchor=\"middle\">mean l1 (%)</text>\n";

  // y ticks
  if (log_y) {
    for (double e = lo_exp; e <= hi_exp; e += 1.0) {
      const double y = y_of(std::pow(10.0, e));
      out << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4
          << "\" text-anchor=\"end\">1e" << e << "</text>\n";
    }
  } else {
    for (int i = 0; i <= 4; ++i) {
      const double v = y_max * 1.05 * i / 4.0;
      out << "<text x=\"" << kLeft - 6 << "\" y=\"" << y_of(v) + 4
          << "\" text-anchor=\"end\">" << fmt_tick(v) << "</text>\n";
    }
  }

  const std::vector<double> xs(eps_values.begin(), eps_values.end());
  if (xs.size() >= 2) {
    // Lines over eps on a log x axis.
    const double lx0 = std::log10(xs.front());
    const double lx1 = std::log10(xs.back());
    auto x_of = [&](double eps) {
      return kLeft + plot_w * (std::log10(eps) - lx0) / (lx1 - lx0);
    };
    for (double e : xs) {
      out << "<text x=\"" << x_of(e) << "\" y=\"" << kTop + plot_h + 18
          << "\" text-anchor=\"middle\">" << fmt_tick(e) << "</text>\n";
    }
    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">epsilon</text>\n";
    for (std::size_t s = 0; s < order.size(); ++s) {
      const auto& pts = series[order[s]];
      const char* color = kPalette[s % std::size(kPalette)];
      if (pts.empty()) continue;
      out << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"2\" points=\"";
      for (const Point& p : pts) out << x_of(p.eps) << ',' << y_of(p.mean) << ' ';
      out << "\"/>\n";
      for (const Point& p : pts) {
        const double x = x_of(p.eps);
        out << "<line x1=\"" << x << "\" y1=\"" << y_of(p.mean + p.std)
            << "\" x2=\"" << x << "\" y2=\"" << y_of(std::max(p.mean - p.std, 0.0))
            << "\" stroke=\"" << color << "\"/>\n";
        out << "<circle cx=\"" << x << "\" cy=\"" << y_of(p.mean)
            << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      }
    }
  } else {
    // Bars, one per variant.
    const double slot = plot_w / static_cast<double>(order.size());
    for (std::size_t s = 0; s < order.size(); ++s) {
      const char* color = kPalette[s % std::size(kPalette)];
      const double x = kLeft + slot * (static_cast<double>(s) + 0.15);
      const double w = slot * 0.7;
      const auto& pts = series[order[s]];
      if (!pts.empty()) {
        const Point& p = pts.front();
        const double y = y_of(p.mean);
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w
            << "\" height=\"" << kTop + plot_h - y << "\" fill=\"" << color
            << "\"/>\n";
        out << "<line x1=\"" << x + w / 2 << "\" y1=\"" << y_of(p.mean + p.std)
            << "\" x2=\"" << x + w / 2 << "\" y2=\""
            << y_of(std::max(p.mean - p.std, 0.0)) << "\" stroke=\"black\"/>\n";
      } else {
        out << "<text x=\"" << x + w / 2 << "\" y=\"" << kTop + plot_h - 6
            << "\" text-anchor=\"middle\">--</text>\n";
      }
    }
    out << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 10
        << "\" text-anchor=\"middle\">epsilon = " << fmt_tick(xs.front())
        << "</text>\n";
  }

  // Legend
  for (std::size_t s = 0; s < order.size(); ++s) {
    const double y = kTop + 10 + 18.0 * static_cast<double>(s);
    out << "<rect x=\"" << kLeft + plot_w + 15 << "\" y=\"" << y - 9
        << "\" width=\"10\" height=\"10\" fill=\""
        << kPalette[s % std::size(kPalette)] << "\"/>\n";
    out << "<text x=\"" << kLeft + plot_w + 30 << "\" y=\"" << y << "\">"
        << order[s] << "</text>\n";
  }
  out << "</svg>\n";
}

void write_svg_file(const std::string& path, const TrialResults& results) {
  std::ostringstream buffer;
  write_svg_plot(buffer, results);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << buffer.str();
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace dpalpha
