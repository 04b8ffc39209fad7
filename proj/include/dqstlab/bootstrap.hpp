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

#ifndef DQSTLAB_BOOTSTRAP_HPP_
#define DQSTLAB_BOOTSTRAP_HPP_

#include <cstdint>
#include <vector>

#include "dqstlab/ghz_estimator.hpp"

namespace dqstlab {

/// Bootstrap mean and standard error: `resamples` same-size resamples
/// with replacement; the value is the mean over resample means and the
/// error their standard deviation. Deterministic under a fixed seed.
ValueWithError bootstrap_stats(const std::vector<double>& values, int resamples,
                               std::uint64_t seed);

}  // namespace dqstlab

#endif  // DQSTLAB_BOOTSTRAP_HPP_
