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

#ifndef DQSTLAB_TWIRL_HPP_
#define DQSTLAB_TWIRL_HPP_

#include <vector>

#include "dqstlab/pauli.hpp"
#include "dqstlab/rng.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

struct SignedPauli {
  Pauli p = Pauli::I;
  int sign = 1;  // +1 or -1
};

/// A dressing (P1, P2, P3, P4) with (P1 (x) P3) CZ (P2 (x) P4) = CZ as an
/// exact 4x4 identity. P1/P2 act on the first wire, P3/P4 on the second;
/// P2 (x) P4 precedes the CZ in circuit order, P1 (x) P3 follows it. The
/// compensating sign is carried on P1.
struct TwirlSet {
  SignedPauli p1, p2, p3, p4;

  Eigen::Matrix4cd before() const;  // P2 (x) P4
  Eigen::Matrix4cd after() const;   // P1 (x) P3
};

const Eigen::Matrix4cd& cz_matrix();

/// All 16 dressings that leave CZ invariant, generated by brute force
/// over Pauli pairs and deduplicated by global phase. Contains
/// (I, I, I, I); ordered by the (P2, P4) pair.
const std::vector<TwirlSet>& cz_twirl_sets();

/// Uniformly random dressing.
const TwirlSet& random_twirl_set(RngStream& rng);

/// Applies CNOT(control -> target) to a dense density matrix as
/// H(target) CZ H(target) with the dressing inserted around the CZ.
/// At zero noise this equals a bare CNOT exactly.
void apply_twirled_cnot(CMat& rho, int control, int target, const TwirlSet& tw);

}  // namespace dqstlab

#endif  // DQSTLAB_TWIRL_HPP_
