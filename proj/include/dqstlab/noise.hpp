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

#ifndef DQSTLAB_NOISE_HPP_
#define DQSTLAB_NOISE_HPP_

#include <vector>

namespace dqstlab {

/// Classical readout bit-flip pair: P(read 1 | prepared 0) and
/// P(read 0 | prepared 1). Each must lie in [0, 1).
struct ReadoutFlip {
  double p01 = 0.0;
  double p10 = 0.0;
};

/// Stochastic error model for the simulator.
///
/// two_qubit_depol acts after each constituent CNOT of the selection
/// block (probability of a uniformly random non-identity two-qubit Pauli
/// on the meter/target pair). Readout flips act classically on measured
/// bits, the meter included. state_prep_depol mixes the prepared target
/// with the maximally mixed state and is never subject to folding.
struct NoiseModel {
  double two_qubit_depol = 0.0;
  std::vector<ReadoutFlip> readout;  // empty: none; one entry: all bits;
                                     // otherwise one entry per measured bit
  double state_prep_depol = 0.0;

  bool has_readout() const;
  /// Flip pair for measured bit `bit` out of `total_bits`.
  ReadoutFlip readout_for(int bit, int total_bits) const;
  void validate() const;

  static NoiseModel ideal() { return NoiseModel{}; }
};

}  // namespace dqstlab

#endif  // DQSTLAB_NOISE_HPP_
