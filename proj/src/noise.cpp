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

#include "dqstlab/noise.hpp"

#include <stdexcept>

namespace dqstlab {

bool NoiseModel::has_readout() const {
  for (const auto& r : readout) {
    if (r.p01 != 0.0 || r.p10 != 0.0) return true;
  }
  return false;
}

ReadoutFlip NoiseModel::readout_for(int bit, int total_bits) const {
  if (readout.empty()) return ReadoutFlip{};
  if (readout.size() == 1) return readout.front();
  if (static_cast<int>(readout.size()) != total_bits) {
    throw std::invalid_argument(
        "NoiseModel: readout list must have one entry, or one per measured bit");
  }
  return readout[static_cast<std::size_t>(bit)];
}

void NoiseModel::validate() const {
  if (two_qubit_depol < 0.0 || two_qubit_depol > 1.0) {
    throw std::invalid_argument("NoiseModel: two_qubit_depol outside [0, 1]");
  }
  if (state_prep_depol < 0.0 || state_prep_depol > 1.0) {
    throw std::invalid_argument("NoiseModel: state_prep_depol outside [0, 1]");
  }
  for (const auto& r : readout) {
    if (r.p01 < 0.0 || r.p01 >= 1.0 || r.p10 < 0.0 || r.p10 >= 1.0) {
      throw std::invalid_argument("NoiseModel: readout flips must be in [0, 1)");
    }
  }
}

}  // namespace dqstlab
