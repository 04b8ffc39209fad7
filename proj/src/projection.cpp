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

#include "dqstlab/projection.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dqstlab {

std::vector<double> project_to_simplex(const std::vector<double>& v) {
  if (v.empty()) {
    throw std::invalid_argument("project_to_simplex: empty vector");
  }
  std::vector<double> sorted = v;
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<double>());
  double cumsum = 0.0;
  double theta = sorted.front() - 1.0;  // overwritten on the first pass
  int active = 0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    cumsum += sorted[j];
    const double candidate = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (sorted[j] - candidate > 0.0) {
      theta = candidate;
      active = static_cast<int>(j + 1);
    }
  }
  if (active == 0) {
    throw std::logic_error("project_to_simplex: no active component");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::max(v[i] - theta, 0.0);
  }
  return out;
}

ProjectionReport project_physical(const RawMatrix& raw) {
  const CMat& m = raw.mat;
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("project_physical: input must be square");
  }
  if (hermiticity_defect(m) > 1e-8) {
    throw std::invalid_argument("project_physical: input not Hermitian within 1e-8");
  }
  const CMat herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(herm);

  const Eigen::VectorXd& vals = es.eigenvalues();
  std::vector<double> lambda(vals.data(), vals.data() + vals.size());
  const std::vector<double> projected = project_to_simplex(lambda);

  Eigen::VectorXd diag(vals.size());
  double negative_mass = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    diag(i) = projected[static_cast<std::size_t>(i)];
    negative_mass += std::max(-vals(i), 0.0);
  }
  CMat out = es.eigenvectors() * diag.asDiagonal() * es.eigenvectors().adjoint();
  // Symmetrize away the eigensolver's last-bit asymmetry.
  out = 0.5 * (out + out.adjoint());

  ProjectionReport report{raw, DensityMatrix::trusted(std::move(out)), 0.0,
                          negative_mass};
  report.frobenius_shift = (m - report.output.mat()).norm();
  return report;
}

}  // namespace dqstlab
