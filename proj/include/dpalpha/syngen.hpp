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

#ifndef DPALPHA_SYNGEN_HPP_
#define DPALPHA_SYNGEN_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "dpalpha/graph.hpp"
#include "dpalpha/powerlaw.hpp"
#include "dpalpha/rng.hpp"

namespace dpalpha {

// Synthetic datasets. Degrees are i.i.d. draws from the truncated discrete
// power law, so the generator's alpha is the exact ground truth. Graph
// realization (erased configuration model) is only needed to exercise the
// edge-list path end to end.
struct GeneratorSpec {
  std::int64_t n = 1;
  double alpha = 2.5;
  TailConfig config{1, 1000};
  bool realize = false;
  std::uint64_t seed = 1;
};

// Parses "alpha=2.5,n=100000,dmin=1,dmax=1000,seed=3,realize=1". Missing
// keys keep their defaults. Throws std::invalid_argument on bad input.
GeneratorSpec parse_generator_spec(std::string_view text);

// Inverse-CDF sampler over a precomputed cumulative table. Immutable after
// construction; one instance may be shared across threads.
class DegreeSampler {
 public:
  DegreeSampler(double alpha, const TailConfig& c);

  // First d with CDF(d) >= u, for u drawn uniformly from (0, 1).
  std::int64_t operator()(NoiseStream& rng) const;
  std::int64_t from_uniform(double u) const;

  const TailConfig& config() const { return config_; }

 private:
  TailConfig config_;
  std::vector<double> cdf_;
};

std::int64_t sample_degree(double alpha, const TailConfig& c,
                           NoiseStream& rng);

// n i.i.d. draws. With realize=true an odd degree sum is fixed by
// incrementing one uniformly chosen entry (decrementing it instead if it sits
// at d_max).
DegreeSequence sample_degree_sequence(const GeneratorSpec& spec,
                                      NoiseStream& rng);
DegreeSequence sample_degree_sequence(const GeneratorSpec& spec);

struct RealizedGraph {
  Graph graph;
  std::int64_t stubs = 0;
  std::int64_t erased_self_loops = 0;   // stub pairs erased as loops
  std::int64_t erased_multi_edges = 0;  // stub pairs erased as duplicates
  std::int64_t nodes_changed = 0;       // nodes whose realized degree differs
  int attempts = 0;                     // matchings drawn

  double erased_fraction() const;
};

// Uniform stub matching. Up to max_attempts matchings are drawn and the first
// simple one is kept; otherwise self-loops and parallel edges of the last
// matching are erased. Large heavy-tailed sequences essentially never match
// simply, so they end in erasure. Throws std::invalid_argument for an odd
// degree sum.
RealizedGraph realize_graph(const DegreeSequence& d, NoiseStream& rng,
                            int max_attempts = 32);

}  // namespace dpalpha

#endif  // DPALPHA_SYNGEN_HPP_
