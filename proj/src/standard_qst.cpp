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

#include "dqstlab/standard_qst.hpp"

#include <map>
#include <stdexcept>

#include "dqstlab/pauli.hpp"

namespace dqstlab {

namespace {

// 2-bit letter codes for a Pauli string over n qubits: 0=I, 1=X, 2=Y, 3=Z.
std::vector<int> letters_of(std::uint64_t code, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int q = n - 1; q >= 0; --q) {
    out[static_cast<std::size_t>(q)] = static_cast<int>(code & 3);
    code >>= 2;
  }
  return out;
}

}  // namespace

std::vector<std::string> enumerate_pauli_settings(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_pauli_settings: n must be at least 1");
  }
  std::vector<std::string> out;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  out.reserve(total);
  std::string cur(static_cast<std::size_t>(n), 'X');
  for (std::uint64_t s = 0; s < total; ++s) {
    std::uint64_t v = s;
    for (int q = n - 1; q >= 0; --q) {
      cur[static_cast<std::size_t>(q)] = "XYZ"[v % 3];
      v /= 3;
    }
    out.push_back(cur);
  }
  return out;
}

RawMatrix standard_qst(const std::vector<PauliSettingData>& settings) {
  if (settings.empty()) {
    throw std::invalid_argument("standard_qst: no settings");
  }
  const int n = static_cast<int>(settings.front().bases.size());
  if (n < 1 || n > 8) {
    throw std::invalid_argument("standard_qst: supported for 1 to 8 qubits");
  }
  const std::size_t dim = std::size_t{1} << n;

  std::map<std::string, const PauliSettingData*> by_bases;
  for (const PauliSettingData& s : settings) {
    if (static_cast<int>(s.bases.size()) != n) {
      throw std::invalid_argument("standard_qst: inconsistent setting sizes");
    }
    if (s.probs.size() != dim) {
      throw std::invalid_argument("standard_qst: outcome table size mismatch");
    }
    by_bases[s.bases] = &s;
  }
  const std::vector<std::string> required = enumerate_pauli_settings(n);
  if (by_bases.size() != required.size()) {
    for (const std::string& r : required) {
      if (!by_bases.count(r)) {
        throw std::invalid_argument("standard_qst: missing setting " + r);
      }
    }
    throw std::invalid_argument("standard_qst: duplicate settings");
  }

  // <P> for every Pauli string, averaged over all compatible settings
  // (those matching P on its support).
  std::uint64_t num_paulis = 1;
  for (int i = 0; i < n; ++i) num_paulis *= 4;

  const Eigen::Index d = static_cast<Eigen::Index>(dim);
  CMat rho = CMat::Zero(d, d);
  for (std::uint64_t code = 0; code < num_paulis; ++code) {
    const std::vector<int> letters = letters_of(code, n);
    double expectation = 0.0;
    int compatible = 0;
    for (const auto& [bases, data] : by_bases) {
      bool match = true;
      for (int q = 0; q < n && match; ++q) {
        const int l = letters[static_cast<std::size_t>(q)];
        if (l != 0 && bases[static_cast<std::size_t>(q)] != "IXYZ"[l]) {
          match = false;
        }
      }
      if (!match) continue;
      ++compatible;
      double val = 0.0;
      for (std::size_t b = 0; b < dim; ++b) {
        int parity = 0;
        for (int q = 0; q < n; ++q) {
          if (letters[static_cast<std::size_t>(q)] != 0 &&
              ((b >> (n - 1 - q)) & 1)) {
            parity ^= 1;
          }
        }
        val += (parity ? -1.0 : 1.0) * data->probs[b];
      }
      expectation += val;
    }
    expectation /= static_cast<double>(compatible);

    PauliString ps;
    for (int q = 0; q < n; ++q) {
      ps.letters.push_back(static_cast<Pauli>(letters[static_cast<std::size_t>(q)]));
    }
    rho += expectation * pauli_matrix(ps);
  }
  rho /= static_cast<double>(dim);
  // Exact hermitization; Pauli coefficients are real so this only cancels
  // floating-point crumbs.
  rho = 0.5 * (rho + rho.adjoint().eval());
  return RawMatrix{std::move(rho)};
}

}  // namespace dqstlab
