// Copyright 2026 The dqstlab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQSTLAB_RNG_HPP_
#define DQSTLAB_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dqstlab {

// All randomness in the library flows through this counter-based generator.
// Standard-library distributions are avoided on purpose: their outputs are
// implementation-defined, and every sampled result here must be bit-exact
// across platforms and runs.

/// SplitMix64 stream: 64-bit counter state advanced by a fixed increment,
/// output through an avalanche mix.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);

  /// Standard normal via Box-Muller (one value per call).
  double gaussian();

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

/// Avalanche hash used to derive child stream seeds.
std::uint64_t mix64(std::uint64_t x);

/// Deterministic child stream keyed by (seed, path...). Streams with
/// different paths are independent for all practical purposes; identical
/// (seed, path) always yields the identical stream.
RngStream derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

/// Multinomial draw of `shots` samples from `probs` (must sum to 1 within
/// 1e-9). Returns per-category counts.
std::vector<std::uint64_t> multinomial_sample(const std::vector<double>& probs,
                                              std::uint64_t shots, RngStream& rng);

}  // namespace dqstlab

#endif  // DQSTLAB_RNG_HPP_
