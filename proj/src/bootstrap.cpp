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

#include "dqstlab/bootstrap.hpp"

#include <cmath>
#include <stdexcept>

#include "dqstlab/rng.hpp"

namespace dqstlab {

ValueWithError bootstrap_stats(const std::vector<double>& values, int resamples,
                               std::uint64_t seed) {
  if (values.empty()) {
    throw std::invalid_argument("bootstrap_stats: empty input");
  }
  if (resamples < 2) {
    throw std::invalid_argument("bootstrap_stats: need at least two resamples");
  }
  RngStream rng(seed);
  const std::size_t n = values.size();
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (int r = 0; r < resamples; ++r) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sum += values[static_cast<std::size_t>(rng.below(n))];
    }
    means[static_cast<std::size_t>(r)] = sum / static_cast<double>(n);
  }
  double mean = 0.0;
  for (double m : means) mean += m;
  mean /= static_cast<double>(resamples);
  double var = 0.0;
  for (double m : means) var += (m - mean) * (m - mean);
  var /= static_cast<double>(resamples - 1);
  return {mean, std::sqrt(var)};
}

}  // namespace dqstlab
