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

#include "dqstlab/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace dqstlab {

int log2_dim(Eigen::Index dim) {
  if (dim < 1) {
    throw std::invalid_argument("dimension must be positive");
  }
  int n = 0;
  Eigen::Index d = dim;
  while (d > 1) {
    if (d % 2 != 0) {
      throw std::invalid_argument("dimension " + std::to_string(dim) +
                                  " is not a power of two");
    }
    d /= 2;
    ++n;
  }
  return n;
}

double hermiticity_defect(const CMat& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

DensityMatrix::DensityMatrix(CMat mat, Trusted)
    : mat_(std::move(mat)), nq_(log2_dim(mat_.rows())) {}

DensityMatrix::DensityMatrix(CMat mat) : DensityMatrix(std::move(mat), Trusted{}) {
  if (mat_.rows() != mat_.cols()) {
    throw std::invalid_argument("DensityMatrix: matrix must be square");
  }
  if (hermiticity_defect(mat_) > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within tolerance");
  }
  if (std::abs(mat_.trace().real() - 1.0) > kTraceTol ||
      std::abs(mat_.trace().imag()) > kTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kEigenvalueTol) {
    throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond tolerance");
  }
}

DensityMatrix DensityMatrix::trusted(CMat mat) {
  return DensityMatrix(std::move(mat), Trusted{});
}

Ket::Ket(CVec amplitudes)
    : amps_(std::move(amplitudes)), nq_(log2_dim(amps_.size())) {
  if (std::abs(amps_.squaredNorm() - 1.0) > kNormTol) {
    throw std::invalid_argument("Ket: squared norm differs from 1");
  }
}

DensityMatrix Ket::to_density_matrix() const {
  return DensityMatrix::trusted(amps_ * amps_.adjoint());
}

}  // namespace dqstlab
