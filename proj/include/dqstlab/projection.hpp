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

#ifndef DQSTLAB_PROJECTION_HPP_
#define DQSTLAB_PROJECTION_HPP_

#include <vector>

#include "dqstlab/estimation.hpp"
#include "dqstlab/types.hpp"

namespace dqstlab {

struct ProjectionReport {
  RawMatrix input;
  DensityMatrix output;
  double frobenius_shift = 0.0;        // ||input - output||_F
  double negative_mass_removed = 0.0;  // sum of the input's negative eigenvalues
};

/// Frobenius-nearest valid density matrix.
///
/// The input is hermitized as (M + M^dagger)/2 (it must already be
/// Hermitian within 1e-8), eigendecomposed, and the eigenvalue vector is
/// projected onto the probability simplex; eigenvectors are untouched,
/// which makes this the exact minimizer. Idempotent on valid states.
/// Eigenvalue ties are broken by a stable descending sort.
ProjectionReport project_physical(const RawMatrix& raw);

/// Euclidean projection onto {v >= 0, sum v = 1} by the sort-and-threshold
/// rule. Exposed for direct testing.
std::vector<double> project_to_simplex(const std::vector<double>& v);

}  // namespace dqstlab

#endif  // DQSTLAB_PROJECTION_HPP_
