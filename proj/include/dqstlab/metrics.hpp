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

#ifndef DQSTLAB_METRICS_HPP_
#define DQSTLAB_METRICS_HPP_

#include "dqstlab/types.hpp"

namespace dqstlab {

/// Uhlmann fidelity F(rho, sigma) = (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2.
///
/// Matrix square roots are taken through Hermitian eigendecomposition with
/// eigenvalues clipped at zero, which keeps near-singular inputs stable.
/// Symmetric in its arguments; clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Pure-state overlap <psi| rho |psi>. Equals fidelity(|psi><psi|, rho).
double pure_fidelity(const Ket& psi, const DensityMatrix& rho);

/// Trace distance D = 1/2 ||rho - sigma||_1 via the eigenvalues of the
/// Hermitian difference.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Hermitian PSD square root with eigenvalue clipping at zero.
CMat sqrtm_psd(const CMat& m);

}  // namespace dqstlab

#endif  // DQSTLAB_METRICS_HPP_
