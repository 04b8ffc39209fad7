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

#include "dqstlab/bits.hpp"

#include <bit>
#include <stdexcept>

namespace dqstlab {

BitVector::BitVector(int n, std::uint64_t index) : n_(n), index_(index) {
  if (n < 0 || n > 63) {
    throw std::invalid_argument("BitVector: n must be in [0, 63]");
  }
  if (n < 63 && index >= (std::uint64_t{1} << n)) {
    throw std::invalid_argument("BitVector: index out of range for n bits");
  }
}

BitVector BitVector::from_string(const std::string& bits) {
  std::uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitVector: string must contain only 0/1");
    }
    index = (index << 1) | std::uint64_t(c - '0');
  }
  return BitVector(static_cast<int>(bits.size()), index);
}

BitVector BitVector::ones(int n) {
  return BitVector(n, n == 0 ? 0 : (std::uint64_t{1} << n) - 1);
}

int BitVector::bit(int i) const {
  if (i < 0 || i >= n_) {
    throw std::out_of_range("BitVector: bit index out of range");
  }
  return static_cast<int>((index_ >> (n_ - 1 - i)) & 1);
}

int BitVector::popcount() const { return std::popcount(index_); }

BitVector BitVector::operator^(const BitVector& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("BitVector: size mismatch in mod-2 addition");
  }
  return BitVector(n_, index_ ^ other.index_);
}

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i) {
    s[static_cast<std::size_t>(i)] = bit(i) ? '1' : '0';
  }
  return s;
}

}  // namespace dqstlab
