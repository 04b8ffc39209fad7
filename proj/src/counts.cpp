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

#include "dqstlab/counts.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dqstlab {

double OutcomeDistribution::total() const {
  return std::accumulate(p.begin(), p.end(), 0.0);
}

std::uint64_t CountTable::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

void CountTable::validate() const {
  setting.validate();
  const std::size_t expected = std::size_t{1} << (n() + 1);
  if (counts.size() != expected) {
    throw std::invalid_argument("CountTable: counts size does not match n");
  }
  if (total() != shots) {
    throw std::invalid_argument("CountTable: counts do not sum to shots");
  }
}

OutcomeDistribution CountTable::frequencies() const {
  if (shots == 0) {
    throw std::invalid_argument("CountTable: no shots recorded");
  }
  OutcomeDistribution dist;
  dist.n = n();
  dist.p.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    dist.p[i] = static_cast<double>(counts[i]) / static_cast<double>(shots);
  }
  return dist;
}

void write_count_table(std::ostream& os, const CountTable& table) {
  table.validate();
  os << "format_version: 1\n";
  os << "n: " << table.n() << "\n";
  os << "k: " << table.setting.k.to_string() << "\n";
  os << "basis: " << basis_char(table.setting.basis) << "\n";
  os << "fold: " << table.setting.fold << "\n";
  os << "shots: " << table.shots << "\n";
  os << "seed: " << table.seed << "\n";
  os << "counts:\n";
  const int n = table.n();
  for (std::uint64_t j = 0; j < table.counts.size(); ++j) {
    if (table.counts[j] == 0) continue;
    const BitVector a(n, j >> 1);
    os << a.to_string() << ',' << ((j & 1) ? '-' : '+') << ','
       << table.counts[j] << "\n";
  }
}

std::string count_table_to_text(const CountTable& table) {
  std::ostringstream os;
  write_count_table(os, table);
  return os.str();
}

namespace {

std::string expect_field(std::istream& is, const std::string& key) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::runtime_error("count table: truncated header");
  }
  const std::string prefix = key + ": ";
  if (line.rfind(prefix, 0) != 0) {
    throw std::runtime_error("count table: expected field '" + key + "'");
  }
  return line.substr(prefix.size());
}

}  // namespace

CountTable read_count_table(std::istream& is) {
  if (expect_field(is, "format_version") != "1") {
    throw std::runtime_error("count table: unsupported format version");
  }
  const int n = std::stoi(expect_field(is, "n"));
  const BitVector k = BitVector::from_string(expect_field(is, "k"));
  const Basis basis = basis_from_char(expect_field(is, "basis").at(0));
  const int fold = std::stoi(expect_field(is, "fold"));
  const std::uint64_t shots = std::stoull(expect_field(is, "shots"));
  const std::uint64_t seed = std::stoull(expect_field(is, "seed"));
  if (k.n() != n) {
    throw std::runtime_error("count table: k length does not match n");
  }
  std::string line;
  if (!std::getline(is, line) || line != "counts:") {
    throw std::runtime_error("count table: missing counts section");
  }

  CountTable table;
  table.setting = Setting(k, basis, fold);
  table.shots = shots;
  table.seed = seed;
  table.counts.assign(std::size_t{1} << (n + 1), 0);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
      throw std::runtime_error("count table: malformed count line: " + line);
    }
    const BitVector a = BitVector::from_string(line.substr(0, c1));
    const std::string sign = line.substr(c1 + 1, c2 - c1 - 1);
    if (a.n() != n || (sign != "+" && sign != "-")) {
      throw std::runtime_error("count table: malformed count line: " + line);
    }
    const std::uint64_t count = std::stoull(line.substr(c2 + 1));
    table.counts[joint_index(a.index(), sign == "-" ? 1 : 0)] = count;
  }
  table.validate();
  return table;
}

CountTable count_table_from_text(const std::string& text) {
  std::istringstream is(text);
  return read_count_table(is);
}

}  // namespace dqstlab
