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

#ifndef DQSTLAB_ZNE_HPP_
#define DQSTLAB_ZNE_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "dqstlab/ghz_estimator.hpp"

namespace dqstlab {

struct ZnePoint {
  int fold = 1;
  double mean = 0.0;
  double std_err = 0.0;
};

/// Fold series with the zero-noise intercept of a least-squares line in
/// the fold factor. Per-instance values are retained for re-analysis.
struct ZneSeries {
  std::vector<ZnePoint> points;          // ascending odd folds, >= 2 of them
  double extrapolated = 0.0;             // fitted value at fold 0
  double slope = 0.0;
  std::vector<std::vector<double>> instance_values;  // one list per fold

  void validate() const;
};

/// One randomized experiment instance: estimate the observable at the
/// given fold with fresh randomness (twirl draws and shot sampling) from
/// the given seed.
using FoldExperiment =
    std::function<double(int fold, std::uint64_t shots, std::uint64_t seed)>;

/// Runs `twirl_instances` independent instances per fold, averages them,
/// attaches bootstrap standard errors, and extrapolates to fold 0 with an
/// unweighted linear fit (set weighted_fit for 1/stderr^2 weights).
ZneSeries run_zne(const FoldExperiment& experiment, const std::vector<int>& folds,
                  int twirl_instances, std::uint64_t shots_per_instance,
                  std::uint64_t seed, bool weighted_fit = false,
                  int bootstrap_resamples = 50);

/// Unweighted (or inverse-variance weighted) straight-line fit; returns
/// {intercept, slope}.
std::pair<double, double> fit_line(const std::vector<double>& x,
                                   const std::vector<double>& y,
                                   const std::vector<double>* weights = nullptr);

}  // namespace dqstlab

#endif  // DQSTLAB_ZNE_HPP_
