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

#ifndef DQSTLAB_ESTIMATION_HPP_
#define DQSTLAB_ESTIMATION_HPP_

#include <cstdint>
#include <vector>

#include "dqstlab/counts.hpp"
#include "dqstlab/setting.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

/// One estimated matrix element <row| rho |col| with row = a+k, col = a.
/// An X-basis setting fills the real part, a Y-basis setting the
/// imaginary part; the unmeasured component is zero with zero error.
struct ElementEstimate {
  BitVector row;
  BitVector col;
  Complex value{0.0, 0.0};
  double stderr_re = 0.0;
  double stderr_im = 0.0;
};

/// Raw reconstruction output: exactly Hermitian by construction, but
/// unit trace and positive semidefiniteness are NOT guaranteed.
struct RawMatrix {
  CMat mat;
};

/// All 2^(n+1)-1 measurement configurations needed for a full
/// reconstruction: (k=0, X) once, then (k, X) and (k, Y) for every
/// nonzero k in ascending index order.
std::vector<Setting> enumerate_settings(int n);

/// Per-element estimates from one setting's joint (quasi-)probabilities.
/// `shots` drives the multinomial standard errors; pass 0 for exact
/// distributions (errors report as 0). Estimates for a and a+k are
/// averaged, so the returned list is conjugate-symmetric under
/// row/col exchange.
std::vector<ElementEstimate> estimate_elements(const Setting& setting,
                                               const std::vector<double>& probs,
                                               std::uint64_t shots);

/// Convenience overload on sampled counts.
std::vector<ElementEstimate> estimate_elements(const CountTable& counts);

struct SettingEstimates {
  Setting setting;
  std::vector<ElementEstimate> estimates;
};

/// Assembles the raw matrix from a complete set of per-setting estimates.
/// Throws if any setting from enumerate_settings(n) is missing.
RawMatrix reconstruct_raw(int n, const std::vector<SettingEstimates>& all);

/// Partial-coverage variant. Entries whose settings were not measured are
/// left at zero and flagged absent; an off-diagonal entry counts as
/// measured only when both its X and Y settings are present.
struct SubsetReconstruction {
  RawMatrix raw;
  Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> measured;
};
SubsetReconstruction reconstruct_subset(int n,
                                        const std::vector<SettingEstimates>& some);

/// Shots per setting so every element estimator lands within epsilon of
/// the truth with failure probability delta_f union-bounded over
/// num_settings settings: ceil((2 b^2/eps^2) ln(2 num_settings/delta_f))
/// with estimator bound b = 2.
std::uint64_t shots_for_accuracy(double epsilon, double delta_f, int num_settings);

}  // namespace dqstlab

#endif  // DQSTLAB_ESTIMATION_HPP_
