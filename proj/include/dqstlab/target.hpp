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

#ifndef DQSTLAB_TARGET_HPP_
#define DQSTLAB_TARGET_HPP_

#include <optional>
#include <string>

#include "dqstlab/bits.hpp"
#include "dqstlab/noise.hpp"
#include "dqstlab/rng.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

// Dense density-matrix simulation is capped here; larger systems go
// through the trajectory path.
inline constexpr int kDenseQubitCap = 10;

enum class TargetKind { GHZ, AllZero, AllPlus, ExplicitMatrix };

TargetKind target_kind_from_string(const std::string& s);
std::string to_string(TargetKind k);

struct TargetSpec {
  TargetKind kind = TargetKind::GHZ;
  int n = 1;
  std::optional<CMat> explicit_matrix;  // required iff kind == ExplicitMatrix

  static TargetSpec ghz(int n) { return {TargetKind::GHZ, n, std::nullopt}; }
  static TargetSpec all_zero(int n) { return {TargetKind::AllZero, n, std::nullopt}; }
  static TargetSpec all_plus(int n) { return {TargetKind::AllPlus, n, std::nullopt}; }
};

Ket ghz_ket(int n);
Ket all_zero_ket(int n);
Ket all_plus_ket(int n);
Ket basis_ket(const BitVector& a);

/// The ideal ket for a (non-explicit) target.
Ket ideal_ket(const TargetSpec& spec);

/// Prepared target state. With state_prep_depol = p this is
/// (1-p) rho + p I/2^n; the selection-block depolarizing noise never acts
/// here.
DensityMatrix prepare_target(const TargetSpec& spec,
                             const NoiseModel& noise = NoiseModel::ideal());

/// Random state from the Hilbert-Schmidt ensemble (Ginibre G, GG^dag
/// normalized). Deterministic under a fixed stream.
DensityMatrix random_density_matrix(int n, RngStream& rng);

}  // namespace dqstlab

#endif  // DQSTLAB_TARGET_HPP_
