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

#ifndef DQSTLAB_CONFUSION_HPP_
#define DQSTLAB_CONFUSION_HPP_

#include <cstdint>
#include <vector>

#include "dqstlab/counts.hpp"
#include "dqstlab/noise.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

/// Column-stochastic readout-error matrix: entry (b, a) holds
/// P(measured b | prepared a). Either one 2x2 block per measured bit or
/// one dense 2^m x 2^m matrix.
class ConfusionMatrix {
 public:
  enum class Mode { PerQubit, Full };

  static ConfusionMatrix per_qubit(std::vector<Eigen::Matrix2d> blocks);
  static ConfusionMatrix full(Eigen::MatrixXd mat);

  Mode mode() const { return mode_; }
  int num_bits() const { return bits_; }
  const std::vector<Eigen::Matrix2d>& blocks() const;
  const Eigen::MatrixXd& matrix() const;

  /// Dense 2^m x 2^m representation (tensor of the blocks in PerQubit
  /// mode). Capped at 10 bits.
  Eigen::MatrixXd dense() const;

  /// Forward map: distribution of measured outcomes given true ones.
  std::vector<double> apply(const std::vector<double>& probs) const;

  /// Inverse map C q = p. May return negative quasi-probabilities; the
  /// result sums to whatever the input summed to. Throws on a singular
  /// calibration.
  std::vector<double> solve(const std::vector<double>& probs) const;

 private:
  Mode mode_ = Mode::PerQubit;
  int bits_ = 0;
  std::vector<Eigen::Matrix2d> blocks_;
  Eigen::MatrixXd full_;
};

/// The model's per-bit confusion blocks, exactly (infinite shots).
ConfusionMatrix exact_confusion(const NoiseModel& noise, int num_bits);

/// Simulated per-bit calibration: prepare |0> and |1> on each bit,
/// `shots` times each, under the model's readout flips.
ConfusionMatrix calibrate_confusion(const NoiseModel& noise, int num_bits,
                                    std::uint64_t shots, std::uint64_t seed);

/// Full-matrix calibration over all 2^m basis-state preparations.
/// Dense; capped at 10 bits. shots = 0 gives the exact model matrix.
ConfusionMatrix calibrate_confusion_full(const NoiseModel& noise, int num_bits,
                                         std::uint64_t shots, std::uint64_t seed);

/// Tensor product of per-bit blocks as one Full-mode matrix.
ConfusionMatrix tensor_confusion(const ConfusionMatrix& per_qubit);

/// Readout-mitigated quasi-probabilities for one setting's counts. The
/// confusion matrix must cover the n system bits plus the meter bit.
/// With clip = true, negative entries are zeroed and the result
/// renormalized to a valid distribution.
OutcomeDistribution mitigate_counts(const CountTable& counts,
                                    const ConfusionMatrix& confusion,
                                    bool clip = false);

/// The same inversion on a bare probability vector over `bits` bits.
std::vector<double> mitigate_probs(const ConfusionMatrix& confusion,
                                   const std::vector<double>& probs,
                                   bool clip = false);

}  // namespace dqstlab

#endif  // DQSTLAB_CONFUSION_HPP_
