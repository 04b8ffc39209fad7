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

#ifndef DQSTLAB_GHZ_ESTIMATOR_HPP_
#define DQSTLAB_GHZ_ESTIMATOR_HPP_

#include <cstdint>
#include <vector>

#include "dqstlab/counts.hpp"

namespace dqstlab {

struct ValueWithError {
  double value = 0.0;
  double std_err = 0.0;
};

/// Algebraically equal combinations of the four (a, meter) cells that
/// determine the GHZ fidelity from the single all-ones X setting. The
/// four-term combination uses every relevant cell and carries the
/// smallest multinomial variance.
enum class GhzCombination {
  FourTerm,     // P(0,+) + P(0,-) + P(1,+) - P(1,-)
  TwoPlusZero,  // 2 P(0,+)
  TwoPlusOne,   // 2 P(1,+)
};

/// GHZ fidelity estimate from the joint (quasi-)probabilities of the
/// all-ones X setting. shots = 0 means an exact distribution (zero
/// standard error).
ValueWithError ghz_fidelity_estimate(int n, const std::vector<double>& probs,
                                     std::uint64_t shots,
                                     GhzCombination combo = GhzCombination::FourTerm);

/// Overload on sampled counts. Rejects settings other than
/// (k = all-ones, X basis).
ValueWithError ghz_fidelity_estimate(const CountTable& counts,
                                     GhzCombination combo = GhzCombination::FourTerm);

}  // namespace dqstlab

#endif  // DQSTLAB_GHZ_ESTIMATOR_HPP_
