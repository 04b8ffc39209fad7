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

#ifndef DQSTLAB_COMPARE_HPP_
#define DQSTLAB_COMPARE_HPP_

#include "dqstlab/metrics.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

/// Side-by-side comparison of two reconstructions against an ideal
/// target. cross_fidelity is the Uhlmann fidelity between the two mixed
/// states; fidelity_a/b are the pure-state overlaps with the ideal.
struct ComparisonReport {
  double cross_fidelity = 0.0;
  double trace_dist = 0.0;
  double fidelity_a = 0.0;
  double fidelity_b = 0.0;
};

ComparisonReport compare_states(const DensityMatrix& rho_a,
                                const DensityMatrix& rho_b, const Ket& ideal);

}  // namespace dqstlab

#endif  // DQSTLAB_COMPARE_HPP_
