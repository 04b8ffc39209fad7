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

#include "dqstlab/twirl.hpp"

#include <stdexcept>

#include "dqstlab/gates.hpp"

namespace dqstlab {

namespace {

Eigen::Matrix4cd signed_pair(const SignedPauli& a, const SignedPauli& b) {
  const CMat k = kron(pauli_1q(a.p), pauli_1q(b.p));
  return static_cast<double>(a.sign * b.sign) * Eigen::Matrix4cd(k);
}

// Entries of Pauli/CZ products are exact in floating point, so equality
// here really is equality.
bool exactly_equal(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) {
  return (a - b).cwiseAbs().maxCoeff() == 0.0;
}

std::vector<TwirlSet> generate_sets() {
  const Eigen::Matrix4cd& cz = cz_matrix();
  std::vector<TwirlSet> sets;
  sets.reserve(16);
  // For every (P2, P4) there is exactly one signed (P1, P3) that restores
  // CZ; find it by exhaustive search and keep the exact-identity witness.
  for (int p2 = 0; p2 < 4; ++p2) {
    for (int p4 = 0; p4 < 4; ++p4) {
      const SignedPauli s2{static_cast<Pauli>(p2), 1};
      const SignedPauli s4{static_cast<Pauli>(p4), 1};
      const Eigen::Matrix4cd target = cz * signed_pair(s2, s4) * cz;
      bool found = false;
      for (int p1 = 0; p1 < 4 && !found; ++p1) {
        for (int p3 = 0; p3 < 4 && !found; ++p3) {
          for (int sign = 1; sign >= -1 && !found; sign -= 2) {
            const SignedPauli s1{static_cast<Pauli>(p1), sign};
            const SignedPauli s3{static_cast<Pauli>(p3), 1};
            if (exactly_equal(signed_pair(s1, s3), target)) {
              sets.push_back(TwirlSet{s1, s2, s3, s4});
              found = true;
            }
          }
        }
      }
      if (!found) {
        throw std::logic_error("cz_twirl_sets: no compensating Pauli pair");
      }
    }
  }
  // Witness check: the condition must hold exactly, with phase +1.
  for (const TwirlSet& t : sets) {
    if (!exactly_equal(t.after() * cz * t.before(), cz)) {
      throw std::logic_error("cz_twirl_sets: generated set fails the identity");
    }
  }
  return sets;
}

}  // namespace

Eigen::Matrix4cd TwirlSet::before() const { return signed_pair(p2, p4); }

Eigen::Matrix4cd TwirlSet::after() const { return signed_pair(p1, p3); }

const Eigen::Matrix4cd& cz_matrix() {
  static const Eigen::Matrix4cd cz = [] {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    m(3, 3) = -1.0;
    return m;
  }();
  return cz;
}

const std::vector<TwirlSet>& cz_twirl_sets() {
  static const std::vector<TwirlSet> sets = generate_sets();
  return sets;
}

const TwirlSet& random_twirl_set(RngStream& rng) {
  const auto& sets = cz_twirl_sets();
  return sets[static_cast<std::size_t>(rng.below(sets.size()))];
}

void apply_twirled_cnot(CMat& rho, int control, int target, const TwirlSet& tw) {
  apply_hadamard(rho, target);
  apply_pauli_1q(rho, control, tw.p2.p);
  apply_pauli_1q(rho, target, tw.p4.p);
  apply_cz(rho, control, target);
  apply_pauli_1q(rho, control, tw.p1.p);
  apply_pauli_1q(rho, target, tw.p3.p);
  apply_hadamard(rho, target);
}

}  // namespace dqstlab
