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

#include "dqstlab/ghz_estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace dqstlab {

namespace {

double clamp0(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

ValueWithError ghz_fidelity_estimate(int n, const std::vector<double>& probs,
                                     std::uint64_t shots, GhzCombination combo) {
  if (probs.size() != (std::size_t{1} << (n + 1))) {
    throw std::invalid_argument("ghz_fidelity_estimate: table size mismatch");
  }
  const std::uint64_t ones = BitVector::ones(n).index();
  const double p0p = probs[joint_index(0, 0)];
  const double p0m = probs[joint_index(0, 1)];
  const double p1p = probs[joint_index(ones, 0)];
  const double p1m = probs[joint_index(ones, 1)];

  // Per-shot estimator value and second moment for each combination.
  double value = 0.0;
  double second = 0.0;
  switch (combo) {
    case GhzCombination::FourTerm:
      value = p0p + p0m + p1p - p1m;
      second = clamp0(p0p) + clamp0(p0m) + clamp0(p1p) + clamp0(p1m);
      break;
    case GhzCombination::TwoPlusZero:
      value = 2.0 * p0p;
      second = 4.0 * clamp0(p0p);
      break;
    case GhzCombination::TwoPlusOne:
      value = 2.0 * p1p;
      second = 4.0 * clamp0(p1p);
      break;
  }
  ValueWithError out;
  out.value = value;
  out.std_err = (shots == 0)
                    ? 0.0
                    : std::sqrt(clamp0(second - value * value) /
                                static_cast<double>(shots));
  return out;
}

ValueWithError ghz_fidelity_estimate(const CountTable& counts, GhzCombination combo) {
  counts.validate();
  const int n = counts.n();
  if (!(counts.setting.k == BitVector::ones(n)) ||
      counts.setting.basis != Basis::X) {
    throw std::invalid_argument(
        "ghz_fidelity_estimate: requires the all-ones selection mask with an "
        "X-basis meter");
  }
  return ghz_fidelity_estimate(n, counts.frequencies().p, counts.shots, combo);
}

}  // namespace dqstlab
