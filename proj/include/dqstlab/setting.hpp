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

#ifndef DQSTLAB_SETTING_HPP_
#define DQSTLAB_SETTING_HPP_

#include <stdexcept>

#include "dqstlab/bits.hpp"

namespace dqstlab {

/// Meter measurement basis. X reads real parts, Y imaginary parts.
enum class Basis { X, Y };

inline char basis_char(Basis b) { return b == Basis::X ? 'X' : 'Y'; }

inline Basis basis_from_char(char c) {
  if (c == 'X') return Basis::X;
  if (c == 'Y') return Basis::Y;
  throw std::invalid_argument("basis must be X or Y");
}

/// One measurement configuration: selection mask, meter basis, fold factor.
/// The fold must be odd so the repeated selection block equals a single one.
struct Setting {
  BitVector k;
  Basis basis = Basis::X;
  int fold = 1;

  Setting() = default;
  Setting(BitVector mask, Basis b, int f = 1) : k(mask), basis(b), fold(f) {
    validate();
  }

  void validate() const {
    if (fold < 1 || fold % 2 == 0) {
      throw std::invalid_argument("Setting: fold must be odd and positive");
    }
  }
};

}  // namespace dqstlab

#endif  // DQSTLAB_SETTING_HPP_
