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

#ifndef DQSTLAB_SIMULATOR_HPP_
#define DQSTLAB_SIMULATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dqstlab/counts.hpp"
#include "dqstlab/noise.hpp"
#include "dqstlab/setting.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

// =========================================================================
// Forward simulation of the meter-coupled circuit.
//
// The joint register holds the n system qubits (qubit 0 = most significant
// index bit) followed by the meter qubit in the least significant bit.
// The meter starts in |+>; the selection block applies one CNOT from the
// meter onto every system qubit where k has a 1, in ascending qubit order,
// repeated `fold` times. With noise, each CNOT is followed by a two-qubit
// depolarizing channel on the (meter, target) pair.
//
// The CNOTs are index permutations, so the zero-noise joint state is
// bit-exact across fold factors.
// =========================================================================

/// System+meter state after the selection block (dim 2^(n+1)).
DensityMatrix joint_state(const DensityMatrix& rho, const BitVector& k,
                          const NoiseModel& noise = NoiseModel::ideal(),
                          int fold = 1);

/// Exact Born probabilities over (a, meter sign) for the given meter basis.
OutcomeDistribution outcome_distribution(const DensityMatrix& joint, Basis basis);

/// Born probabilities with the model's readout flips applied as a
/// classical post-channel on the n+1 measured bits.
OutcomeDistribution outcome_distribution(const DensityMatrix& joint, Basis basis,
                                         const NoiseModel& noise);

/// Applies independent classical bit flips to a distribution over
/// `bits`-bit outcomes (bit 0 = most significant; the last bit is the
/// meter when the distribution spans n+1 bits).
void apply_readout_channel(std::vector<double>& probs, const NoiseModel& noise,
                           int bits);

/// Full path from prepared state to the measured joint distribution for
/// one setting, including fold repetitions and readout flips.
OutcomeDistribution setting_distribution(const DensityMatrix& rho,
                                         const Setting& setting,
                                         const NoiseModel& noise = NoiseModel::ideal());

/// Multinomial draw from a distribution; identical (dist, shots, seed)
/// give identical counts.
CountTable sample_shots(const OutcomeDistribution& dist, const Setting& setting,
                        std::uint64_t shots, std::uint64_t seed);

/// Computational-basis probabilities of rho measured after rotating each
/// qubit into the basis named by `bases` (string over 'X','Y','Z').
/// Used by the Pauli-settings tomography baseline.
std::vector<double> measure_in_pauli_bases(const DensityMatrix& rho,
                                           const std::string& bases);

}  // namespace dqstlab

#endif  // DQSTLAB_SIMULATOR_HPP_
