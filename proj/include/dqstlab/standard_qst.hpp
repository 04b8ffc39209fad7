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

#ifndef DQSTLAB_STANDARD_QST_HPP_
#define DQSTLAB_STANDARD_QST_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "dqstlab/estimation.hpp"

namespace dqstlab {

/// Computational-basis data for one product-Pauli measurement setting.
/// `probs` holds the 2^n outcome frequencies (exact probabilities,
/// empirical frequencies, or mitigated quasi-probabilities).
struct PauliSettingData {
  std::string bases;           // length n over 'X','Y','Z'
  std::vector<double> probs;   // size 2^n
  std::uint64_t shots = 0;     // 0 marks an exact distribution
};

/// All 3^n basis strings in lexicographic order (X < Y < Z).
std::vector<std::string> enumerate_pauli_settings(int n);

/// Linear-inversion tomography: rho = 2^-n sum_P <P> P over all 4^n Pauli
/// strings, each expectation averaged over every compatible setting with
/// identity positions marginalized. Requires the full 3^n settings; exact
/// input distributions reproduce the state exactly.
RawMatrix standard_qst(const std::vector<PauliSettingData>& settings);

}  // namespace dqstlab

#endif  // DQSTLAB_STANDARD_QST_HPP_
