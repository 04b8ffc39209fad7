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

#include "dqstlab/zne.hpp"

#include <numeric>
#include <stdexcept>

#include "dqstlab/bootstrap.hpp"
#include "dqstlab/rng.hpp"

namespace dqstlab {

void ZneSeries::validate() const {
  if (points.size() < 2) {
    throw std::invalid_argument("ZneSeries: need at least two fold points");
  }
  int prev = 0;
  for (const ZnePoint& p : points) {
    if (p.fold < 1 || p.fold % 2 == 0) {
      throw std::invalid_argument("ZneSeries: folds must be odd and positive");
    }
    if (p.fold <= prev) {
      throw std::invalid_argument("ZneSeries: folds must be strictly increasing");
    }
    prev = p.fold;
  }
}

std::pair<double, double> fit_line(const std::vector<double>& x,
                                   const std::vector<double>& y,
                                   const std::vector<double>* weights) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line: need matching x/y with >= 2 points");
  }
  double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = weights ? (*weights)[i] : 1.0;
    sw += w;
    sx += w * x[i];
    sy += w * y[i];
    sxx += w * x[i] * x[i];
    sxy += w * x[i] * y[i];
  }
  const double denom = sw * sxx - sx * sx;
  if (denom == 0.0) {
    throw std::invalid_argument("fit_line: degenerate abscissae");
  }
  const double slope = (sw * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / sw;
  return {intercept, slope};
}

ZneSeries run_zne(const FoldExperiment& experiment, const std::vector<int>& folds,
                  int twirl_instances, std::uint64_t shots_per_instance,
                  std::uint64_t seed, bool weighted_fit, int bootstrap_resamples) {
  if (folds.size() < 2) {
    throw std::invalid_argument("run_zne: need at least two folds");
  }
  if (twirl_instances < 1) {
    throw std::invalid_argument("run_zne: need at least one instance");
  }
  if (!experiment) {
    throw std::invalid_argument("run_zne: empty experiment closure");
  }

  ZneSeries series;
  for (std::size_t fi = 0; fi < folds.size(); ++fi) {
    const int fold = folds[fi];
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(twirl_instances));
    for (int inst = 0; inst < twirl_instances; ++inst) {
      const std::uint64_t child =
          derive_stream(seed, {0x7a6e65ULL, static_cast<std::uint64_t>(fold),
                               static_cast<std::uint64_t>(inst)})
              .next_u64();
      values.push_back(experiment(fold, shots_per_instance, child));
    }
    const ValueWithError stats = bootstrap_stats(
        values, bootstrap_resamples,
        derive_stream(seed, {0x626f6f74ULL, static_cast<std::uint64_t>(fold)})
            .next_u64());
    series.points.push_back({fold, stats.value, stats.std_err});
    series.instance_values.push_back(std::move(values));
  }
  series.validate();

  std::vector<double> x, y, w;
  for (const ZnePoint& p : series.points) {
    x.push_back(static_cast<double>(p.fold));
    y.push_back(p.mean);
    w.push_back(p.std_err > 0 ? 1.0 / (p.std_err * p.std_err) : 1.0);
  }
  const auto [intercept, slope] = fit_line(x, y, weighted_fit ? &w : nullptr);
  series.extrapolated = intercept;
  series.slope = slope;
  return series;
}

}  // namespace dqstlab
