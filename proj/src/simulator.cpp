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

#include "dqstlab/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "dqstlab/gates.hpp"
#include "dqstlab/rng.hpp"
#include "dqstlab/target.hpp"

namespace dqstlab {

DensityMatrix joint_state(const DensityMatrix& rho, const BitVector& k,
                          const NoiseModel& noise, int fold) {
  noise.validate();
  if (fold < 1 || fold % 2 == 0) {
    throw std::invalid_argument("joint_state: fold must be odd and positive");
  }
  const int n = rho.num_qubits();
  if (k.n() != n) {
    throw std::invalid_argument("joint_state: selection mask does not match system size");
  }
  if (n + 1 > kDenseQubitCap + 1) {
    throw std::invalid_argument("joint_state: dense mode capped at 10 system qubits");
  }

  // rho (x) |+><+| on the meter (meter = last register position).
  const Eigen::Index d = rho.dim();
  CMat joint = CMat::Zero(2 * d, 2 * d);
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) {
      const Complex half = 0.5 * rho.mat()(a, b);
      joint(2 * a, 2 * b) = half;
      joint(2 * a, 2 * b + 1) = half;
      joint(2 * a + 1, 2 * b) = half;
      joint(2 * a + 1, 2 * b + 1) = half;
    }
  }

  const int meter = n;
  for (int rep = 0; rep < fold; ++rep) {
    for (int q = 0; q < n; ++q) {
      if (!k.bit(q)) continue;
      apply_cnot(joint, meter, q);
      if (noise.two_qubit_depol > 0.0) {
        depolarize_pair(joint, meter, q, noise.two_qubit_depol);
      }
    }
  }
  return DensityMatrix::trusted(std::move(joint));
}

OutcomeDistribution outcome_distribution(const DensityMatrix& joint, Basis basis) {
  const int n = joint.num_qubits() - 1;
  if (n < 1) {
    throw std::invalid_argument("outcome_distribution: joint state must hold a meter");
  }
  OutcomeDistribution dist;
  dist.n = n;
  dist.p.assign(std::size_t{1} << (n + 1), 0.0);
  const CMat& lam = joint.mat();
  for (Eigen::Index a = 0; a < (Eigen::Index{1} << n); ++a) {
    const double pops = 0.5 * (lam(2 * a, 2 * a).real() + lam(2 * a + 1, 2 * a + 1).real());
    const Complex coh = lam(2 * a, 2 * a + 1);
    const double delta = (basis == Basis::X) ? coh.real() : -coh.imag();
    dist.p[static_cast<std::size_t>(2 * a)] = pops + delta;
    dist.p[static_cast<std::size_t>(2 * a + 1)] = pops - delta;
  }
  const double total = dist.total();
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::runtime_error("outcome_distribution: probabilities do not sum to 1");
  }
  return dist;
}

OutcomeDistribution outcome_distribution(const DensityMatrix& joint, Basis basis,
                                         const NoiseModel& noise) {
  OutcomeDistribution dist = outcome_distribution(joint, basis);
  apply_readout_channel(dist.p, noise, dist.n + 1);
  return dist;
}

void apply_readout_channel(std::vector<double>& probs, const NoiseModel& noise,
                           int bits) {
  if (!noise.has_readout()) return;
  if (probs.size() != (std::size_t{1} << bits)) {
    throw std::invalid_argument("apply_readout_channel: size mismatch");
  }
  for (int q = 0; q < bits; ++q) {
    const ReadoutFlip f = noise.readout_for(q, bits);
    if (f.p01 == 0.0 && f.p10 == 0.0) continue;
    const std::size_t mask = std::size_t{1} << (bits - 1 - q);
    for (std::size_t j = 0; j < probs.size(); ++j) {
      if (j & mask) continue;
      const double p0 = probs[j];
      const double p1 = probs[j | mask];
      probs[j] = (1.0 - f.p01) * p0 + f.p10 * p1;
      probs[j | mask] = f.p01 * p0 + (1.0 - f.p10) * p1;
    }
  }
}

OutcomeDistribution setting_distribution(const DensityMatrix& rho,
                                         const Setting& setting,
                                         const NoiseModel& noise) {
  const DensityMatrix joint = joint_state(rho, setting.k, noise, setting.fold);
  return outcome_distribution(joint, setting.basis, noise);
}

CountTable sample_shots(const OutcomeDistribution& dist, const Setting& setting,
                        std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) {
    throw std::invalid_argument("sample_shots: shots must be positive");
  }
  if (dist.p.size() != (std::size_t{1} << (setting.k.n() + 1))) {
    throw std::invalid_argument("sample_shots: distribution does not match setting");
  }
  RngStream rng(seed);
  CountTable table;
  table.setting = setting;
  table.shots = shots;
  table.seed = seed;
  table.counts = multinomial_sample(dist.p, shots, rng);
  return table;
}

std::vector<double> measure_in_pauli_bases(const DensityMatrix& rho,
                                           const std::string& bases) {
  const int n = rho.num_qubits();
  if (static_cast<int>(bases.size()) != n) {
    throw std::invalid_argument("measure_in_pauli_bases: bases length mismatch");
  }
  CMat work = rho.mat();
  for (int q = 0; q < n; ++q) {
    switch (bases[static_cast<std::size_t>(q)]) {
      case 'Z':
        break;
      case 'X':
        apply_hadamard(work, q);
        break;
      case 'Y':
        apply_sdg(work, q);
        apply_hadamard(work, q);
        break;
      default:
        throw std::invalid_argument("measure_in_pauli_bases: bases must be X, Y or Z");
    }
  }
  std::vector<double> probs(static_cast<std::size_t>(work.rows()));
  for (Eigen::Index j = 0; j < work.rows(); ++j) {
    probs[static_cast<std::size_t>(j)] = work(j, j).real();
  }
  return probs;
}

}  // namespace dqstlab
