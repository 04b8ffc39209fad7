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

#include "dqstlab/pauli.hpp"

#include <stdexcept>
#include <utility>

namespace dqstlab {

namespace {

const Complex kI{0.0, 1.0};

CMat make_pauli(Pauli p) {
  CMat m(2, 2);
  switch (p) {
    case Pauli::I:
      m << 1, 0, 0, 1;
      break;
    case Pauli::X:
      m << 0, 1, 1, 0;
      break;
    case Pauli::Y:
      m << 0, -kI, kI, 0;
      break;
    case Pauli::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

}  // namespace

char pauli_char(Pauli p) { return "IXYZ"[static_cast<int>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("invalid Pauli letter: ") + c);
  }
}

const CMat& pauli_1q(Pauli p) {
  static const CMat mats[4] = {make_pauli(Pauli::I), make_pauli(Pauli::X),
                               make_pauli(Pauli::Y), make_pauli(Pauli::Z)};
  return mats[static_cast<int>(p)];
}

PauliString::PauliString(std::vector<Pauli> ls, Complex ph)
    : letters(std::move(ls)), phase(ph) {
  bool ok = (ph == Complex{1, 0}) || (ph == Complex{-1, 0}) ||
            (ph == Complex{0, 1}) || (ph == Complex{0, -1});
  if (!ok) {
    throw std::invalid_argument("PauliString: phase must be one of +1, -1, +i, -i");
  }
}

PauliString PauliString::parse(const std::string& s) {
  std::size_t pos = 0;
  Complex phase{1, 0};
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    if (s[pos] == '-') phase = Complex{-1, 0};
    ++pos;
  }
  if (pos < s.size() && s[pos] == 'i') {
    phase *= kI;
    ++pos;
  }
  std::vector<Pauli> letters;
  for (; pos < s.size(); ++pos) {
    letters.push_back(pauli_from_char(s[pos]));
  }
  return PauliString(std::move(letters), phase);
}

std::string PauliString::to_string() const {
  std::string s;
  if (phase == Complex{-1, 0}) {
    s += '-';
  } else if (phase == Complex{0, 1}) {
    s += "+i";
  } else if (phase == Complex{0, -1}) {
    s += "-i";
  }
  for (Pauli p : letters) s += pauli_char(p);
  return s;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMat pauli_matrix(const PauliString& p) {
  if (p.n() > 12) {
    throw std::invalid_argument("pauli_matrix: dense build capped at 12 qubits");
  }
  CMat m = CMat::Identity(1, 1);
  for (Pauli letter : p.letters) {
    m = kron(m, pauli_1q(letter));
  }
  return p.phase * m;
}

}  // namespace dqstlab
