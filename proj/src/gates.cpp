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

#include "dqstlab/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace dqstlab {

namespace {

using u64 = std::uint64_t;

int register_size(Eigen::Index dim) { return log2_dim(dim); }

// Insert a 0 bit at position `b` of a compressed index.
inline u64 insert_bit(u64 i, int b) {
  const u64 lo = (u64{1} << b) - 1;
  return ((i & ~lo) << 1) | (i & lo);
}

Eigen::Matrix2cd hadamard_2x2() {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd h;
  h << s, s, s, -s;
  return h;
}

}  // namespace

u64 qubit_mask(int q, int m) {
  if (q < 0 || q >= m) {
    throw std::invalid_argument("qubit index out of range");
  }
  return u64{1} << (m - 1 - q);
}

void apply_unitary_1q(CMat& rho, int q, const Eigen::Matrix2cd& u) {
  const int m = register_size(rho.rows());
  const u64 mask = qubit_mask(q, m);
  const int b = m - 1 - q;
  const Eigen::Index half = rho.rows() / 2;

  // rho <- U rho
  for (Eigen::Index i = 0; i < half; ++i) {
    const Eigen::Index j0 = static_cast<Eigen::Index>(insert_bit(static_cast<u64>(i), b));
    const Eigen::Index j1 = j0 | static_cast<Eigen::Index>(mask);
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const Complex a0 = rho(j0, c);
      const Complex a1 = rho(j1, c);
      rho(j0, c) = u(0, 0) * a0 + u(0, 1) * a1;
      rho(j1, c) = u(1, 0) * a0 + u(1, 1) * a1;
    }
  }
  // rho <- rho U^dagger
  for (Eigen::Index i = 0; i < half; ++i) {
    const Eigen::Index c0 = static_cast<Eigen::Index>(insert_bit(static_cast<u64>(i), b));
    const Eigen::Index c1 = c0 | static_cast<Eigen::Index>(mask);
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      const Complex a0 = rho(r, c0);
      const Complex a1 = rho(r, c1);
      rho(r, c0) = a0 * std::conj(u(0, 0)) + a1 * std::conj(u(0, 1));
      rho(r, c1) = a0 * std::conj(u(1, 0)) + a1 * std::conj(u(1, 1));
    }
  }
}

void apply_hadamard(CMat& rho, int q) { apply_unitary_1q(rho, q, hadamard_2x2()); }

void apply_sdg(CMat& rho, int q) {
  Eigen::Matrix2cd sdg;
  sdg << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(0, -1);
  apply_unitary_1q(rho, q, sdg);
}

void apply_cnot(CMat& rho, int control, int target) {
  const int m = register_size(rho.rows());
  const u64 cmask = qubit_mask(control, m);
  const u64 tmask = qubit_mask(target, m);
  const u64 d = static_cast<u64>(rho.rows());
  auto perm = [&](u64 j) { return (j & cmask) ? (j ^ tmask) : j; };
  // The permutation is an involution; swap each orbit once.
  for (u64 j = 0; j < d; ++j) {
    const u64 pj = perm(j);
    for (u64 k = 0; k < d; ++k) {
      const u64 pk = perm(k);
      if (pj > j || (pj == j && pk > k)) {
        std::swap(rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)),
                  rho(static_cast<Eigen::Index>(pj), static_cast<Eigen::Index>(pk)));
      }
    }
  }
}

void apply_cz(CMat& rho, int q1, int q2) {
  const int m = register_size(rho.rows());
  const u64 both = qubit_mask(q1, m) | qubit_mask(q2, m);
  const u64 d = static_cast<u64>(rho.rows());
  for (u64 j = 0; j < d; ++j) {
    const bool sj = (j & both) == both;
    for (u64 k = 0; k < d; ++k) {
      const bool sk = (k & both) == both;
      if (sj != sk) {
        rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) *= -1.0;
      }
    }
  }
}

void apply_pauli_1q(CMat& rho, int q, Pauli p) {
  if (p == Pauli::I) return;
  const int m = register_size(rho.rows());
  const u64 mask = qubit_mask(q, m);
  const u64 d = static_cast<u64>(rho.rows());
  if (p == Pauli::Z) {
    for (u64 j = 0; j < d; ++j) {
      const bool sj = j & mask;
      for (u64 k = 0; k < d; ++k) {
        if (sj != bool(k & mask)) {
          rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) *= -1.0;
        }
      }
    }
    return;
  }
  // X and Y both flip the qubit bit; Y additionally contributes Z-type
  // signs, which survive conjugation only on bit-mismatched entries.
  for (u64 j = 0; j < d; ++j) {
    const u64 pj = j ^ mask;
    for (u64 k = 0; k < d; ++k) {
      const u64 pk = k ^ mask;
      if (pj > j || (pj == j && pk > k)) {
        std::swap(rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)),
                  rho(static_cast<Eigen::Index>(pj), static_cast<Eigen::Index>(pk)));
      }
    }
  }
  if (p == Pauli::Y) {
    for (u64 j = 0; j < d; ++j) {
      const bool sj = j & mask;
      for (u64 k = 0; k < d; ++k) {
        if (sj != bool(k & mask)) {
          rho(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) *= -1.0;
        }
      }
    }
  }
}

void depolarize_pair(CMat& rho, int q1, int q2, double prob) {
  if (prob == 0.0) return;
  if (prob < 0.0 || prob > 15.0 / 16.0) {
    throw std::invalid_argument("depolarize_pair: prob must be in [0, 15/16]");
  }
  const int m = register_size(rho.rows());
  const int b1 = m - 1 - q1;
  const int b2 = m - 1 - q2;
  const int hi = std::max(b1, b2);
  const int lo = std::min(b1, b2);
  const u64 mask1 = u64{1} << hi;
  const u64 mask2 = u64{1} << lo;
  const Eigen::Index quarter = rho.rows() / 4;

  // Average over all 16 Pauli pairs equals "replace the pair with I/4";
  // the 15-Pauli channel is that map with rescaled weight.
  const double gamma = 16.0 * prob / 15.0;

  CMat traced = CMat::Zero(quarter, quarter);
  auto embed = [&](u64 g, u64 v) {
    u64 j = insert_bit(insert_bit(g, lo), hi);
    if (v & 2) j |= mask1;
    if (v & 1) j |= mask2;
    return static_cast<Eigen::Index>(j);
  };
  for (Eigen::Index g = 0; g < quarter; ++g) {
    for (Eigen::Index h = 0; h < quarter; ++h) {
      Complex sum = 0.0;
      for (u64 v = 0; v < 4; ++v) {
        sum += rho(embed(static_cast<u64>(g), v), embed(static_cast<u64>(h), v));
      }
      traced(g, h) = sum;
    }
  }
  rho *= (1.0 - gamma);
  for (Eigen::Index g = 0; g < quarter; ++g) {
    for (Eigen::Index h = 0; h < quarter; ++h) {
      const Complex add = gamma * 0.25 * traced(g, h);
      for (u64 v = 0; v < 4; ++v) {
        rho(embed(static_cast<u64>(g), v), embed(static_cast<u64>(h), v)) += add;
      }
    }
  }
}

void depolarize_global(CMat& rho, double prob) {
  if (prob == 0.0) return;
  const Eigen::Index d = rho.rows();
  rho *= (1.0 - prob);
  rho.diagonal().array() += prob / static_cast<double>(d);
}

void sv_apply_hadamard(CVec& psi, int q) {
  const int m = register_size(psi.size());
  const u64 mask = qubit_mask(q, m);
  const int b = m - 1 - q;
  const double s = 1.0 / std::sqrt(2.0);
  const Eigen::Index half = psi.size() / 2;
  for (Eigen::Index i = 0; i < half; ++i) {
    const Eigen::Index j0 = static_cast<Eigen::Index>(insert_bit(static_cast<u64>(i), b));
    const Eigen::Index j1 = j0 | static_cast<Eigen::Index>(mask);
    const Complex a0 = psi(j0);
    const Complex a1 = psi(j1);
    psi(j0) = s * (a0 + a1);
    psi(j1) = s * (a0 - a1);
  }
}

void sv_apply_sdg(CVec& psi, int q) {
  const int m = register_size(psi.size());
  const u64 mask = qubit_mask(q, m);
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    if (static_cast<u64>(j) & mask) psi(j) *= Complex(0, -1);
  }
}

void sv_apply_cnot(CVec& psi, int control, int target) {
  const int m = register_size(psi.size());
  const u64 cmask = qubit_mask(control, m);
  const u64 tmask = qubit_mask(target, m);
  for (u64 j = 0; j < static_cast<u64>(psi.size()); ++j) {
    if ((j & cmask) && !(j & tmask)) {
      std::swap(psi(static_cast<Eigen::Index>(j)),
                psi(static_cast<Eigen::Index>(j | tmask)));
    }
  }
}

}  // namespace dqstlab
