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

#include "dqstlab/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace dqstlab {

namespace {

double clamp0(double x) { return x > 0.0 ? x : 0.0; }

// Standard error of a per-shot variable with mean `mean` and second
// moment `second`, from `shots` samples. Quasi-probabilities can push the
// plug-in variance slightly negative; clamp it.
double multinomial_stderr(double second, double mean, std::uint64_t shots) {
  if (shots == 0) return 0.0;
  return std::sqrt(clamp0(second - mean * mean) / static_cast<double>(shots));
}

}  // namespace

std::vector<Setting> enumerate_settings(int n) {
  if (n < 1) {
    throw std::invalid_argument("enumerate_settings: n must be at least 1");
  }
  std::vector<Setting> settings;
  settings.reserve((std::size_t{1} << (n + 1)) - 1);
  settings.emplace_back(BitVector::zeros(n), Basis::X);
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    settings.emplace_back(BitVector(n, k), Basis::X);
    settings.emplace_back(BitVector(n, k), Basis::Y);
  }
  return settings;
}

std::vector<ElementEstimate> estimate_elements(const Setting& setting,
                                               const std::vector<double>& probs,
                                               std::uint64_t shots) {
  const int n = setting.k.n();
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (probs.size() != 2 * dim) {
    throw std::invalid_argument("estimate_elements: probability table size mismatch");
  }
  if (probs.empty()) {
    throw std::invalid_argument("estimate_elements: empty table");
  }
  if (setting.k.is_zero() && setting.basis == Basis::Y) {
    throw std::invalid_argument(
        "estimate_elements: k = 0 with a Y-basis meter is invalid; "
        "diagonal elements are real");
  }

  std::vector<ElementEstimate> out;
  out.reserve(dim);

  if (setting.k.is_zero()) {
    // Populations: <a|rho|a> = P(a, +) + P(a, -).
    for (std::uint64_t a = 0; a < dim; ++a) {
      const double pop = probs[joint_index(a, 0)] + probs[joint_index(a, 1)];
      ElementEstimate e;
      e.row = BitVector(n, a);
      e.col = e.row;
      e.value = Complex(pop, 0.0);
      e.stderr_re = multinomial_stderr(clamp0(probs[joint_index(a, 0)]) +
                                           clamp0(probs[joint_index(a, 1)]),
                                       pop, shots);
      out.push_back(e);
    }
    return out;
  }

  // Meter expectation conditioned on outcome a, normalized per total
  // shots of the setting: <B_a> = P(a, +) - P(a, -).
  const std::uint64_t kidx = setting.k.index();
  for (std::uint64_t a = 0; a < dim; ++a) {
    const std::uint64_t ak = a ^ kidx;
    const double exp_a = probs[joint_index(a, 0)] - probs[joint_index(a, 1)];
    const double exp_ak = probs[joint_index(ak, 0)] - probs[joint_index(ak, 1)];
    // Second moment of the averaged per-shot variable (the four outcome
    // cells are disjoint).
    const double second =
        0.25 * (clamp0(probs[joint_index(a, 0)]) + clamp0(probs[joint_index(a, 1)]) +
                clamp0(probs[joint_index(ak, 0)]) + clamp0(probs[joint_index(ak, 1)]));

    ElementEstimate e;
    e.row = BitVector(n, ak);
    e.col = BitVector(n, a);
    if (setting.basis == Basis::X) {
      // Re<a+k|rho|a> from <X_a>; the a+k outcome estimates the same
      // real part, so average the two.
      const double re = 0.5 * (exp_a + exp_ak);
      e.value = Complex(re, 0.0);
      e.stderr_re = multinomial_stderr(second, re, shots);
    } else {
      // Im<a+k|rho|a> from <Y_a>; the a+k outcome estimates the
      // negated imaginary part.
      const double im = 0.5 * (exp_a - exp_ak);
      e.value = Complex(0.0, im);
      e.stderr_im = multinomial_stderr(second, im, shots);
    }
    out.push_back(e);
  }
  return out;
}

std::vector<ElementEstimate> estimate_elements(const CountTable& counts) {
  counts.validate();
  if (counts.shots == 0) {
    throw std::invalid_argument("estimate_elements: zero shots");
  }
  return estimate_elements(counts.setting, counts.frequencies().p, counts.shots);
}

namespace {

void accumulate(CMat& mat,
                Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>& measured,
                const SettingEstimates& se, int n) {
  const std::uint64_t dim = std::uint64_t{1} << n;
  if (se.setting.k.n() != n || se.estimates.size() != dim) {
    throw std::invalid_argument("reconstruct: estimates of inconsistent dimension");
  }
  for (const ElementEstimate& e : se.estimates) {
    const auto r = static_cast<Eigen::Index>(e.row.index());
    const auto c = static_cast<Eigen::Index>(e.col.index());
    if (r == c) {
      mat(r, c) += Complex(e.value.real(), 0.0);
      measured(r, c) = 1;
    } else if (c < r) {
      // Each unordered pair appears twice in the list with the averaged
      // value; take it once and mirror explicitly to stay Hermitian.
      mat(r, c) += e.value;
      mat(c, r) += std::conj(e.value);
    }
  }
}

}  // namespace

SubsetReconstruction reconstruct_subset(int n,
                                        const std::vector<SettingEstimates>& some) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  SubsetReconstruction out{RawMatrix{CMat::Zero(dim, dim)},
                           Eigen::Matrix<std::uint8_t, Eigen::Dynamic,
                                         Eigen::Dynamic>::Zero(dim, dim)};

  // Track X/Y coverage per mask to decide which entries are complete.
  std::vector<std::uint8_t> x_seen(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> y_seen(std::size_t{1} << n, 0);
  for (const SettingEstimates& se : some) {
    auto& seen = (se.setting.basis == Basis::X) ? x_seen : y_seen;
    if (seen[se.setting.k.index()]) {
      throw std::invalid_argument("reconstruct: duplicate setting");
    }
    accumulate(out.raw.mat, out.measured, se, n);
    seen[se.setting.k.index()] = 1;
  }
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    if (!(x_seen[k] && y_seen[k])) continue;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      out.measured(static_cast<Eigen::Index>(a ^ k), static_cast<Eigen::Index>(a)) = 1;
    }
  }
  // Zero out incomplete off-diagonal entries so "absent" is unambiguous.
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (!out.measured(r, c)) out.raw.mat(r, c) = Complex(0.0, 0.0);
    }
  }
  return out;
}

RawMatrix reconstruct_raw(int n, const std::vector<SettingEstimates>& all) {
  std::vector<std::uint8_t> x_seen(std::size_t{1} << n, 0);
  std::vector<std::uint8_t> y_seen(std::size_t{1} << n, 0);
  for (const SettingEstimates& se : all) {
    if (se.setting.k.n() != n) {
      throw std::invalid_argument("reconstruct_raw: inconsistent dimensions");
    }
    auto& seen = (se.setting.basis == Basis::X) ? x_seen : y_seen;
    seen[se.setting.k.index()] = 1;
  }
  if (!x_seen[0]) {
    throw std::invalid_argument("reconstruct_raw: missing the k = 0 setting");
  }
  for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
    if (!x_seen[k] || !y_seen[k]) {
      throw std::invalid_argument("reconstruct_raw: missing settings for mask " +
                                  BitVector(n, k).to_string());
    }
  }
  return reconstruct_subset(n, all).raw;
}

std::uint64_t shots_for_accuracy(double epsilon, double delta_f, int num_settings) {
  if (epsilon <= 0.0) {
    throw std::invalid_argument("shots_for_accuracy: epsilon must be positive");
  }
  if (delta_f <= 0.0 || delta_f >= 1.0) {
    throw std::invalid_argument("shots_for_accuracy: delta_f must be in (0, 1)");
  }
  if (num_settings < 1) {
    throw std::invalid_argument("shots_for_accuracy: need at least one setting");
  }
  constexpr double kEstimatorBound = 2.0;
  const double raw = (2.0 * kEstimatorBound * kEstimatorBound / (epsilon * epsilon)) *
                     std::log(2.0 * num_settings / delta_f);
  return static_cast<std::uint64_t>(std::ceil(raw));
}

}  // namespace dqstlab
