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

#ifndef DQSTLAB_TRAJECTORY_HPP_
#define DQSTLAB_TRAJECTORY_HPP_

#include <cstdint>

#include "dqstlab/counts.hpp"
#include "dqstlab/noise.hpp"

namespace dqstlab {

// Trajectory mode covers GHZ targets with the all-ones selection mask and
// an X-basis meter, up to 20 system qubits (2^(n+1) statevector
// amplitudes). Every circuit element is Clifford and every sampled error
// is a Pauli, so each shot propagates its errors onto the ideal final
// statevector instead of re-evolving amplitudes: a propagated Pauli only
// permutes measurement outcomes by its X mask.
inline constexpr int kTrajectoryQubitCap = 20;

/// Per-shot sampled counts for Setting{k = all-ones, X, fold}. The
/// zero-noise empirical distribution converges to the dense-mode
/// outcome_distribution as shots grow.
CountTable trajectory_ghz_counts(int n, const NoiseModel& noise, int fold,
                                 std::uint64_t shots, std::uint64_t seed);

}  // namespace dqstlab

#endif  // DQSTLAB_TRAJECTORY_HPP_
