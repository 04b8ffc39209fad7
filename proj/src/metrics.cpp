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

#include "dqstlab/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dqstlab {

namespace {

void check_dims(Eigen::Index a, Eigen::Index b) {
  if (a != b) {
    throw std::invalid_argument("state dimension mismatch");
  }
}

}  // namespace

CMat sqrtm_psd(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m);
  Eigen::VectorXd vals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho.dim(), sigma.dim());
  const CMat sr = sqrtm_psd(rho.mat());
  const CMat inner = sr * sigma.mat() * sr;
  Eigen::SelfAdjointEigenSolver<CMat> es(inner, Eigen::EigenvaluesOnly);
  double tr = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(tr * tr, 0.0, 1.0);
}

double pure_fidelity(const Ket& psi, const DensityMatrix& rho) {
  check_dims(psi.dim(), rho.dim());
  const Complex v = psi.amplitudes().adjoint() * rho.mat() * psi.amplitudes();
  return std::clamp(v.real(), 0.0, 1.0);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  check_dims(rho.dim(), sigma.dim());
  Eigen::SelfAdjointEigenSolver<CMat> es(rho.mat() - sigma.mat(),
                                         Eigen::EigenvaluesOnly);
  return std::clamp(0.5 * es.eigenvalues().cwiseAbs().sum(), 0.0, 1.0);
}

}  // namespace dqstlab
