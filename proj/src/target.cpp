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

#include "dqstlab/target.hpp"

#include <cmath>
#include <stdexcept>

namespace dqstlab {

TargetKind target_kind_from_string(const std::string& s) {
  if (s == "ghz") return TargetKind::GHZ;
  if (s == "all_zero") return TargetKind::AllZero;
  if (s == "all_plus") return TargetKind::AllPlus;
  if (s == "explicit") return TargetKind::ExplicitMatrix;
  throw std::invalid_argument("unknown target kind: " + s);
}

std::string to_string(TargetKind k) {
  switch (k) {
    case TargetKind::GHZ:
      return "ghz";
    case TargetKind::AllZero:
      return "all_zero";
    case TargetKind::AllPlus:
      return "all_plus";
    case TargetKind::ExplicitMatrix:
      return "explicit";
  }
  return "?";
}

Ket ghz_ket(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  CVec amps = CVec::Zero(d);
  amps(0) = 1.0 / std::sqrt(2.0);
  amps(d - 1) = amps(0);
  return Ket(amps);
}

Ket all_zero_ket(int n) {
  CVec amps = CVec::Zero(Eigen::Index{1} << n);
  amps(0) = 1.0;
  return Ket(amps);
}

Ket all_plus_ket(int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  return Ket(CVec::Constant(d, Complex(1.0 / std::sqrt(static_cast<double>(d)), 0.0)));
}

Ket basis_ket(const BitVector& a) {
  CVec amps = CVec::Zero(Eigen::Index{1} << a.n());
  amps(static_cast<Eigen::Index>(a.index())) = 1.0;
  return Ket(amps);
}

Ket ideal_ket(const TargetSpec& spec) {
  switch (spec.kind) {
    case TargetKind::GHZ:
      return ghz_ket(spec.n);
    case TargetKind::AllZero:
      return all_zero_ket(spec.n);
    case TargetKind::AllPlus:
      return all_plus_ket(spec.n);
    case TargetKind::ExplicitMatrix:
      throw std::invalid_argument("explicit targets have no ideal ket");
  }
  throw std::invalid_argument("bad target kind");
}

DensityMatrix prepare_target(const TargetSpec& spec, const NoiseModel& noise) {
  noise.validate();
  if (spec.n < 1 || spec.n > kDenseQubitCap) {
    throw std::invalid_argument("prepare_target: dense mode supports 1 to 10 qubits");
  }
  CMat rho;
  if (spec.kind == TargetKind::ExplicitMatrix) {
    if (!spec.explicit_matrix) {
      throw std::invalid_argument("prepare_target: explicit target without a matrix");
    }
    rho = DensityMatrix(*spec.explicit_matrix).mat();  // validates physicality
    if (log2_dim(rho.rows()) != spec.n) {
      throw std::invalid_argument("prepare_target: explicit matrix size mismatch");
    }
  } else {
    rho = ideal_ket(spec).to_density_matrix().mat();
  }
  const double p = noise.state_prep_depol;
  if (p > 0.0) {
    const Eigen::Index d = rho.rows();
    rho = (1.0 - p) * rho;
    rho.diagonal().array() += p / static_cast<double>(d);
  }
  return DensityMatrix::trusted(std::move(rho));
}

DensityMatrix random_density_matrix(int n, RngStream& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  CMat g(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian());
    }
  }
  CMat rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::trusted(std::move(rho));
}

}  // namespace dqstlab
