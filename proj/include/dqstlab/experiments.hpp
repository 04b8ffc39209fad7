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

#ifndef DQSTLAB_EXPERIMENTS_HPP_
#define DQSTLAB_EXPERIMENTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "dqstlab/compare.hpp"
#include "dqstlab/config.hpp"
#include "dqstlab/confusion.hpp"
#include "dqstlab/counts.hpp"
#include "dqstlab/estimation.hpp"
#include "dqstlab/projection.hpp"
#include "dqstlab/standard_qst.hpp"
#include "dqstlab/zne.hpp"

namespace dqstlab {

// =========================================================================
// In-memory pipelines. The run_* functions below wrap these and write the
// result bundle to disk.
// =========================================================================

/// Complete DQST pass: per-setting simulation and sampling, optional
/// readout mitigation, element estimation, raw assembly, projection.
struct DqstOutcome {
  std::vector<CountTable> counts;            // one per setting
  std::vector<SettingEstimates> estimates;
  RawMatrix raw;
  DensityMatrix projected;
  double fidelity_ideal = 0.0;               // vs the ideal target ket
};

DqstOutcome simulate_dqst(const TargetSpec& target, const NoiseModel& noise,
                          std::uint64_t shots_per_setting, std::uint64_t seed,
                          bool qrem, std::uint64_t calibration_shots = 0,
                          int threads = 1);

/// Pauli-settings baseline over all 3^n product bases.
struct StandardQstOutcome {
  std::vector<PauliSettingData> settings;
  RawMatrix raw;
  DensityMatrix projected;
  double fidelity_ideal = 0.0;
};

StandardQstOutcome simulate_standard_qst(const TargetSpec& target,
                                         const NoiseModel& noise,
                                         std::uint64_t shots_per_setting,
                                         std::uint64_t seed, bool qrem,
                                         std::uint64_t calibration_shots = 0,
                                         int threads = 1);

/// Shot-noise error bar for the projected-state fidelity: resamples every
/// count table from its empirical distribution, reruns estimation,
/// reconstruction and projection, and reports the standard deviation.
ValueWithError mc_fidelity_stderr(const DqstOutcome& outcome, const Ket& ideal,
                                  bool qrem, std::uint64_t calibration_shots,
                                  const NoiseModel& noise, int resamples,
                                  std::uint64_t seed, int threads = 1);

// -------------------------------------------------------------------------
// GHZ fidelity experiment closures for fold extrapolation.
// -------------------------------------------------------------------------

/// Dense-mode instance: a freshly Pauli-dressed selection block (one
/// random dressing per CZ per instance) evolved with per-CNOT
/// depolarizing, then sampled. The dressing leaves the ideal unitary
/// unchanged, so instances differ only through their randomness.
FoldExperiment make_dense_ghz_experiment(int n, const NoiseModel& noise, bool qrem);

/// Trajectory-mode instance for large systems. Under the stochastic Pauli
/// noise model, a dressed block and a bare one produce identical outcome
/// distributions, so an instance is an independently seeded trajectory run.
FoldExperiment make_trajectory_ghz_experiment(int n, const NoiseModel& noise,
                                              bool qrem);

/// Exact dense estimator value at a given fold (no sampling).
double exact_ghz_fold_fidelity(int n, const NoiseModel& noise, int fold);

// =========================================================================
// Orchestrated runs: write counts, estimates, matrices, metric tables and
// the config echo under cfg.output_path. Outputs are byte-reproducible
// for identical configs except run_info.txt (wall clock).
// =========================================================================

struct MetricRow {
  std::string label;
  double value = 0.0;
  double std_err = 0.0;
};

struct ResultBundle {
  std::string config_echo;
  std::vector<std::string> files;  // paths relative to output_path
  std::vector<MetricRow> metrics;
};

ResultBundle run_experiment(const ExperimentConfig& cfg);

ResultBundle run_full_tomography(const ExperimentConfig& cfg);
ResultBundle run_ghz_fidelity_sweep(const ExperimentConfig& cfg);
ResultBundle run_qst_compare(const ExperimentConfig& cfg);
ResultBundle run_qrem_check(const ExperimentConfig& cfg);
ResultBundle run_zne_demo(const ExperimentConfig& cfg);

}  // namespace dqstlab

#endif  // DQSTLAB_EXPERIMENTS_HPP_
