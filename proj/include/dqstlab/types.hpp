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

#ifndef DQSTLAB_TYPES_HPP_
#define DQSTLAB_TYPES_HPP_

#include <Eigen/Dense>
#include <complex>

namespace dqstlab {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Physicality tolerances for constructed quantum states.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueTol = 1e-10;
inline constexpr double kNormTol = 1e-10;

/// log2 of a power-of-two dimension; throws otherwise.
int log2_dim(Eigen::Index dim);

/// Largest entrywise |M - M^dagger|.
double hermiticity_defect(const CMat& m);

/// A validated density operator: Hermitian, unit trace, positive
/// semidefinite (all within the tolerances above).
class DensityMatrix {
 public:
  /// Validates all invariants; throws std::invalid_argument on violation.
  explicit DensityMatrix(CMat mat);

  /// Skips validation. For producers that guarantee physicality by
  /// construction (channel outputs, projections).
  static DensityMatrix trusted(CMat mat);

  const CMat& mat() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }
  int num_qubits() const { return nq_; }

 private:
  struct Trusted {};
  DensityMatrix(CMat mat, Trusted);

  CMat mat_;
  int nq_;
};

/// A normalized pure state vector.
class Ket {
 public:
  explicit Ket(CVec amplitudes);

  const CVec& amplitudes() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  int num_qubits() const { return nq_; }

  /// |psi><psi| as a (trusted) density matrix.
  DensityMatrix to_density_matrix() const;

 private:
  CVec amps_;
  int nq_;
};

}  // namespace dqstlab

#endif  // DQSTLAB_TYPES_HPP_
