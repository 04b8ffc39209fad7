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

#ifndef DQSTLAB_BITS_HPP_
#define DQSTLAB_BITS_HPP_

#include <cstdint>
#include <string>

namespace dqstlab {

/// Length-n binary string with mod-2 addition.
///
/// Qubit ordering convention used throughout the library: bit 0 is the
/// leftmost tensor factor and the most significant bit of the
/// computational-basis index. A BitVector therefore stores the basis
/// index directly; bit(i) reads tensor factor i.
class BitVector {
 public:
  BitVector() = default;
  BitVector(int n, std::uint64_t index);

  /// Parse from a string of '0'/'1' characters, leftmost char = bit 0.
  static BitVector from_string(const std::string& bits);

  static BitVector zeros(int n) { return BitVector(n, 0); }
  static BitVector ones(int n);

  int n() const { return n_; }
  std::uint64_t index() const { return index_; }
  int bit(int i) const;
  int popcount() const;
  bool is_zero() const { return index_ == 0; }

  /// Mod-2 addition (bitwise XOR). Requires equal n.
  BitVector operator^(const BitVector& other) const;

  bool operator==(const BitVector& other) const {
    return n_ == other.n_ && index_ == other.index_;
  }

  std::string to_string() const;

 private:
  int n_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace dqstlab

#endif  // DQSTLAB_BITS_HPP_
