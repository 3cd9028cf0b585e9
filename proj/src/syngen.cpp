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

#include "dpalpha/syngen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dpalpha/exact_sum.hpp"

namespace dpalpha {

namespace {

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(),
                                   out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value for '" + std::string(key) + "': '" +
                                std::string(value) + "'");
  }
  return out;
}

}  // namespace

GeneratorSpec parse_generator_spec(std::string_view text) {
  GeneratorSpec spec;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected key=value, got '" +
                                  std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "alpha") {
      spec.alpha = parse_number<double>(key, value);
    } else if (key == "n") {
      spec.n = parse_number<std::int64_t>(key, value);
    } else if (key == "dmin") {
      spec.config.d_min = parse_number<std::int64_t>(key, value);
    } else if (key == "dmax") {
      spec.config.d_max = parse_number<std::int64_t>(key, value);
    } else if (key == "seed") {
      spec.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "realize") {
      spec.realize = parse_number<int>(key, value) != 0;
    } else {
      throw std::invalid_argument("unknown generator key '" +
                                  std::string(key) + "'");
    }
  }
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  spec.config.validate();
  return spec;
}

DegreeSampler::DegreeSampler(double alpha, const TailConfig& c) : config_(c) {
  c.validate();
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  const auto size = static_cast<std::size_t>(c.d_max - c.d_min + 1);
  std::vector<double> weights(size);
  for (std::size_t i = 0; i < size; ++i) {
    weights[i] = std::pow(static_cast<double>(c.d_min) + static_cast<double>(i),
                          -alpha);
  }
  const double z = zeta_trunc(alpha, c);
  cdf_.resize(size);
  CompensatedSum running;
  for (std::size_t i = 0; i < size; ++i) {
    running.add(weights[i]);
    cdf_[i] = running.value() / z;
  }
  cdf_.back() = 1.0;
}

std::int64_t DegreeSampler::from_uniform(double u) const {
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), u);
  const auto idx = std::min<std::ptrdiff_t>(it - cdf_.begin(),
                                            static_cast<std::ptrdiff_t>(cdf_.size()) - 1);
  return config_.d_min + idx;
}

std::int64_t DegreeSampler::operator()(NoiseStream& rng) const {
  return from_uniform(rng.uniform01());
}

std::int64_t sample_degree(double alpha, const TailConfig& c,
                           NoiseStream& rng) {
  return DegreeSampler(alpha, c)(rng);
}

DegreeSequence sample_degree_sequence(const GeneratorSpec& spec,
                                      NoiseStream& rng) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  const DegreeSampler sampler(spec.alpha, spec.config);
  DegreeSequence d;
  d.degrees.resize(static_cast<std::size_t>(spec.n));
  for (auto& deg : d.degrees) deg = sampler(rng);
  if (spec.realize) {
    const std::int64_t sum =
        std::accumulate(d.degrees.begin(), d.degrees.end(), std::int64_t{0});
    if (sum % 2 != 0) {
      auto& pick = d.degrees[rng.below(d.degrees.size())];
      pick += pick < spec.config.d_max ? 1 : -1;
    }
  }
  return d;
}

DegreeSequence sample_degree_sequence(const GeneratorSpec& spec) {
  NoiseStream rng(RngSeed{spec.seed, streams::kGenerator});
  return sample_degree_sequence(spec, rng);
}

double RealizedGraph::erased_fraction() const {
  if (stubs == 0) return 0.0;
  return 2.0 * static_cast<double>(erased_self_loops + erased_multi_edges) /
         static_cast<double>(stubs);
}

RealizedGraph realize_graph(const DegreeSequence& d, NoiseStream& rng,
                            int max_attempts) {
  std::vector<NodeId> stubs;
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (d.degrees[v] < 0) throw std::invalid_argument("negative degree");
    stubs.insert(stubs.end(), static_cast<std::size_t>(d.degrees[v]),
                 static_cast<NodeId>(v));
  }
  if (stubs.size() % 2 != 0) {
    throw std::invalid_argument("degree sum must be even");
  }

  RealizedGraph out;
  out.stubs = static_cast<std::int64_t>(stubs.size());
  std::vector<Edge> edges;
  for (int attempt = 1; attempt <= std::max(max_attempts, 1); ++attempt) {
    // Fisher-Yates with the stream's own bounded draw so the matching does
    // not depend on the standard library's distribution implementation.
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[rng.below(i)]);
    }
    out.attempts = attempt;
    out.erased_self_loops = 0;
    edges.clear();
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) {
        ++out.erased_self_loops;
        continue;
      }
      edges.emplace_back(std::min(stubs[i], stubs[i + 1]),
                         std::max(stubs[i], stubs[i + 1]));
    }
    if (out.erased_self_loops > 0 && attempt < max_attempts) continue;
    std::sort(edges.begin(), edges.end());
    const auto unique_end = std::unique(edges.begin(), edges.end());
    out.erased_multi_edges =
        static_cast<std::int64_t>(edges.end() - unique_end);
    const bool simple = out.erased_self_loops == 0 && out.erased_multi_edges == 0;
    if (simple || attempt >= max_attempts) break;
  }
  out.graph = Graph(static_cast<NodeId>(d.size()), std::move(edges));

  const DegreeSequence realized = degrees(out.graph);
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (realized.degrees[v] != d.degrees[v]) ++out.nodes_changed;
  }
  return out;
}

}  // namespace dpalpha
