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

#ifndef DQSTLAB_PAULI_HPP_
#define DQSTLAB_PAULI_HPP_

#include <string>
#include <vector>

#include "dqstlab/types.hpp"

namespace dqstlab {

enum class Pauli : int { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// The 2x2 matrix of a single Pauli letter.
const CMat& pauli_1q(Pauli p);

/// A tensor product of Pauli letters with a global phase in {+1, -1, +i, -i}.
struct PauliString {
  std::vector<Pauli> letters;
  Complex phase{1.0, 0.0};

  PauliString() = default;
  PauliString(std::vector<Pauli> ls, Complex ph = Complex{1.0, 0.0});

  /// Parse e.g. "XZ", "-IY", "+iXX". Leftmost letter acts on qubit 0.
  static PauliString parse(const std::string& s);

  int n() const { return static_cast<int>(letters.size()); }
  std::string to_string() const;
};

/// Dense 2^n x 2^n matrix of a Pauli string. Dense build is capped at
/// n <= 12.
CMat pauli_matrix(const PauliString& p);

/// Kronecker product, a applied to the leftmost (most significant) factor.
CMat kron(const CMat& a, const CMat& b);

}  // namespace dqstlab

#endif  // DQSTLAB_PAULI_HPP_
