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

#include "dqstlab/trajectory.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "dqstlab/gates.hpp"
#include "dqstlab/rng.hpp"

namespace dqstlab {

namespace {

using u64 = std::uint64_t;

struct Gate {
  enum Kind { H, Sdg, Cnot } kind;
  int a = 0;  // qubit (H, Sdg) or control (Cnot)
  int b = 0;  // target (Cnot)
};

// A Pauli error as X/Z bit masks over the joint register; phases are
// irrelevant for measurement statistics.
struct PauliMask {
  u64 x = 0;
  u64 z = 0;
};

// Heisenberg propagation of a Pauli through one Clifford gate.
void propagate(PauliMask& p, const Gate& g, int m) {
  switch (g.kind) {
    case Gate::H: {
      const u64 mask = qubit_mask(g.a, m);
      const bool xb = p.x & mask;
      const bool zb = p.z & mask;
      if (xb != zb) {
        p.x ^= mask;
        p.z ^= mask;
      }
      break;
    }
    case Gate::Sdg: {
      const u64 mask = qubit_mask(g.a, m);
      if (p.x & mask) p.z ^= mask;
      break;
    }
    case Gate::Cnot: {
      const u64 cmask = qubit_mask(g.a, m);
      const u64 tmask = qubit_mask(g.b, m);
      if (p.x & cmask) p.x ^= tmask;
      if (p.z & tmask) p.z ^= cmask;
      break;
    }
  }
}

// One stochastic error location inside the circuit.
struct ChannelPoint {
  std::size_t next_gate;  // index of the first gate after this point
  enum Kind { PairDepol, GlobalDepol } kind;
  int q1 = 0;  // PairDepol qubits
  int q2 = 0;
  double prob = 0.0;
};

constexpr u64 pauli_x_bit(int letter) { return (letter == 1 || letter == 2) ? 1 : 0; }
constexpr u64 pauli_z_bit(int letter) { return (letter == 2 || letter == 3) ? 1 : 0; }

}  // namespace

CountTable trajectory_ghz_counts(int n, const NoiseModel& noise, int fold,
                                 std::uint64_t shots, std::uint64_t seed) {
  noise.validate();
  if (n < 1 || n > kTrajectoryQubitCap) {
    throw std::invalid_argument("trajectory_ghz_counts: n must be in [1, 20]");
  }
  if (fold < 1 || fold % 2 == 0) {
    throw std::invalid_argument("trajectory_ghz_counts: fold must be odd");
  }
  if (shots < 1) {
    throw std::invalid_argument("trajectory_ghz_counts: shots must be positive");
  }

  const int m = n + 1;
  const int meter = n;

  // Ideal circuit: GHZ prep, meter prep, folded fan-out, X-basis rotation.
  std::vector<Gate> gates;
  gates.push_back({Gate::H, 0, 0});
  for (int q = 1; q < n; ++q) gates.push_back({Gate::Cnot, q - 1, q});
  gates.push_back({Gate::H, meter, 0});
  std::vector<ChannelPoint> channels;
  if (noise.state_prep_depol > 0.0) {
    channels.push_back({gates.size(), ChannelPoint::GlobalDepol, 0, 0,
                        noise.state_prep_depol});
  }
  for (int rep = 0; rep < fold; ++rep) {
    for (int q = 0; q < n; ++q) {
      gates.push_back({Gate::Cnot, meter, q});
      if (noise.two_qubit_depol > 0.0) {
        channels.push_back({gates.size(), ChannelPoint::PairDepol, meter, q,
                            noise.two_qubit_depol});
      }
    }
  }
  gates.push_back({Gate::H, meter, 0});

  // Final ideal statevector and its measurement CDF over the support.
  CVec psi = CVec::Zero(Eigen::Index{1} << m);
  psi(0) = 1.0;
  for (const Gate& g : gates) {
    switch (g.kind) {
      case Gate::H:
        sv_apply_hadamard(psi, g.a);
        break;
      case Gate::Sdg:
        sv_apply_sdg(psi, g.a);
        break;
      case Gate::Cnot:
        sv_apply_cnot(psi, g.a, g.b);
        break;
    }
  }
  std::vector<u64> support;
  std::vector<double> cdf;
  double acc = 0.0;
  for (Eigen::Index j = 0; j < psi.size(); ++j) {
    const double p = std::norm(psi(j));
    if (p > 1e-15) {
      acc += p;
      support.push_back(static_cast<u64>(j));
      cdf.push_back(acc);
    }
  }
  cdf.back() = std::max(cdf.back(), 1.0);

  const bool readout = noise.has_readout();
  RngStream rng = derive_stream(seed, {0x7261'6a65'6374'6f72ULL});

  CountTable table;
  table.setting = Setting(BitVector::ones(n), Basis::X, fold);
  table.shots = shots;
  table.seed = seed;
  table.counts.assign(std::size_t{1} << m, 0);

  for (std::uint64_t s = 0; s < shots; ++s) {
    u64 xmask = 0;
    for (const ChannelPoint& ch : channels) {
      if (!rng.bernoulli(ch.prob)) continue;
      PauliMask err;
      if (ch.kind == ChannelPoint::PairDepol) {
        const int idx = static_cast<int>(rng.below(15)) + 1;
        const int la = idx >> 2;
        const int lb = idx & 3;
        const u64 m1 = qubit_mask(ch.q1, m);
        const u64 m2 = qubit_mask(ch.q2, m);
        err.x = pauli_x_bit(la) * m1 | pauli_x_bit(lb) * m2;
        err.z = pauli_z_bit(la) * m1 | pauli_z_bit(lb) * m2;
      } else {
        // Uniform Pauli over the system qubits (identity included)
        // realizes the global depolarizing channel.
        for (int q = 0; q < n; ++q) {
          const int letter = static_cast<int>(rng.below(4));
          const u64 qm = qubit_mask(q, m);
          err.x |= pauli_x_bit(letter) * qm;
          err.z |= pauli_z_bit(letter) * qm;
        }
      }
      for (std::size_t g = ch.next_gate; g < gates.size(); ++g) {
        propagate(err, gates[g], m);
      }
      xmask ^= err.x;
    }

    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    u64 outcome = support[static_cast<std::size_t>(it - cdf.begin())] ^ xmask;

    if (readout) {
      for (int q = 0; q < m; ++q) {
        const ReadoutFlip f = noise.readout_for(q, m);
        const u64 qm = qubit_mask(q, m);
        const double pflip = (outcome & qm) ? f.p10 : f.p01;
        if (pflip > 0.0 && rng.bernoulli(pflip)) outcome ^= qm;
      }
    }
    table.counts[outcome] += 1;
  }
  return table;
}

}  // namespace dqstlab
