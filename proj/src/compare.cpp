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

#include "dqstlab/compare.hpp"

#include <stdexcept>

namespace dqstlab {

ComparisonReport compare_states(const DensityMatrix& rho_a,
                                const DensityMatrix& rho_b, const Ket& ideal) {
  if (rho_a.dim() != rho_b.dim() || rho_a.dim() != ideal.dim()) {
    throw std::invalid_argument("compare_states: dimension mismatch");
  }
  ComparisonReport r;
  r.cross_fidelity = fidelity(rho_a, rho_b);
  r.trace_dist = trace_distance(rho_a, rho_b);
  r.fidelity_a = pure_fidelity(ideal, rho_a);
  r.fidelity_b = pure_fidelity(ideal, rho_b);
  return r;
}

}  // namespace dqstlab
