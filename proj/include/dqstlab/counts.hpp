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

#ifndef DQSTLAB_COUNTS_HPP_
#define DQSTLAB_COUNTS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dqstlab/setting.hpp"

namespace dqstlab {

// Joint outcomes for one setting are indexed as (a_index << 1) | meter_bit,
// where meter_bit 0 encodes the '+' outcome and 1 the '-' outcome of the
// measured basis.

inline std::uint64_t joint_index(std::uint64_t a_index, int meter_bit) {
  return (a_index << 1) | static_cast<std::uint64_t>(meter_bit);
}

/// Exact or quasi- probability table over (a, meter) for one setting.
/// Entries may go negative after readout mitigation.
struct OutcomeDistribution {
  int n = 0;                // system qubits
  std::vector<double> p;    // size 2^(n+1)

  double total() const;
};

/// Shot counts over (a, meter) for one setting.
struct CountTable {
  Setting setting;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;   // provenance of the sampling stream
  std::vector<std::uint64_t> counts;  // size 2^(n+1)

  int n() const { return setting.k.n(); }
  std::uint64_t total() const;
  void validate() const;

  /// Empirical joint frequencies (counts / shots).
  OutcomeDistribution frequencies() const;
};

// Text form: a small header (n, k bitstring, basis, fold, shots, seed)
// followed by one "outcome_bits,meter_sign,count" line per nonzero cell.
// Round-trips bit-exactly.
void write_count_table(std::ostream& os, const CountTable& table);
std::string count_table_to_text(const CountTable& table);
CountTable read_count_table(std::istream& is);
CountTable count_table_from_text(const std::string& text);

}  // namespace dqstlab

#endif  // DQSTLAB_COUNTS_HPP_
