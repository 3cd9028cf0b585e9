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

#ifndef DPALPHA_RNG_HPP_
#define DPALPHA_RNG_HPP_

#include <cstdint>
#include <limits>

namespace dpalpha {

// (base_seed, stream_index) fully determines a noise stream.
struct RngSeed {
  std::uint64_t base_seed = 0;
  std::uint64_t stream_index = 0;
};

// Fixed sub-stream offsets within one trial. Node v draws from
// kNodeBase + v, so per-node releases never share state.
namespace streams {
inline constexpr std::uint64_t kTailNoise = 0;
inline constexpr std::uint64_t kCountNoise = 1;
inline constexpr std::uint64_t kBaseline = 2;
inline constexpr std::uint64_t kGenerator = 3;
inline constexpr std::uint64_t kRealize = 4;
inline constexpr std::uint64_t kNodeBase = std::uint64_t{1} << 32;
}  // namespace streams

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// SplitMix64 generator keyed by an RngSeed. Satisfies
// UniformRandomBitGenerator. Value type: copy to fork, never share across
// threads.
class NoiseStream {
 public:
  using result_type = std::uint64_t;

  explicit NoiseStream(RngSeed seed)
      : state_(splitmix64_mix(seed.base_seed ^
                              splitmix64_mix(seed.stream_index +
                                             0x632BE59BD9B4E019ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  // Uniform on the open interval (0, 1), 53 bits of resolution.
  double uniform01() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with
  // rejection).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

// Trial-level seed; every stream a trial consumes derives from it.
struct TrialSeed {
  std::uint64_t value = 0;

  NoiseStream stream(std::uint64_t substream) const {
    return NoiseStream(RngSeed{value, substream});
  }
  NoiseStream node_stream(std::uint64_t node) const {
    return stream(streams::kNodeBase + node);
  }
};

// Trial t of a run with base seed s uses TrialSeed{s + t}; rerunning with
// --seed s+t and one trial replays it.
inline TrialSeed trial_seed(std::uint64_t base_seed, std::uint64_t trial) {
  return TrialSeed{base_seed + trial};
}

}  // namespace dpalpha

#endif  // DPALPHA_RNG_HPP_
