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

#ifndef DQSTLAB_GATES_HPP_
#define DQSTLAB_GATES_HPP_

#include <cstdint>

#include "dqstlab/pauli.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

// Dense in-place gate kernels on a 2^m x 2^m density matrix (or 2^m
// statevector). Qubit q occupies basis-index bit (m - 1 - q): qubit 0 is
// the most significant bit, matching BitVector.

/// Basis-index bit mask of qubit q in an m-qubit register.
std::uint64_t qubit_mask(int q, int m);

void apply_unitary_1q(CMat& rho, int q, const Eigen::Matrix2cd& u);
void apply_hadamard(CMat& rho, int q);
void apply_sdg(CMat& rho, int q);

/// CNOT conjugation as a pure index permutation; no floating-point
/// arithmetic, so repeated application is bit-exact.
void apply_cnot(CMat& rho, int control, int target);
void apply_cz(CMat& rho, int q1, int q2);

/// Pauli conjugation P rho P^dagger (any sign on P cancels).
void apply_pauli_1q(CMat& rho, int q, Pauli p);

/// Two-qubit depolarizing channel: with probability `prob` a uniformly
/// random non-identity Pauli pair acts on (q1, q2).
void depolarize_pair(CMat& rho, int q1, int q2, double prob);

/// Global depolarizing: rho <- (1-p) rho + p I/d.
void depolarize_global(CMat& rho, double prob);

// Statevector kernels used by the trajectory builder.
void sv_apply_hadamard(CVec& psi, int q);
void sv_apply_sdg(CVec& psi, int q);
void sv_apply_cnot(CVec& psi, int control, int target);

}  // namespace dqstlab

#endif  // DQSTLAB_GATES_HPP_
