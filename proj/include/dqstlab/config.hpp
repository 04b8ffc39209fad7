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

#ifndef DQSTLAB_CONFIG_HPP_
#define DQSTLAB_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dqstlab/noise.hpp"
#include "dqstlab/target.hpp"

namespace dqstlab {

enum class ExperimentKind {
  FullTomography,
  GhzFidelity,
  QstCompare,
  QremCheck,
  ZneDemo,
};

ExperimentKind experiment_kind_from_string(const std::string& s);
std::string to_string(ExperimentKind k);

struct ZneConfig {
  std::vector<int> folds{1, 3, 5};
  int twirl_instances = 100;
  std::uint64_t shots_per_instance = 1000;
};

/// One experiment run, fully specified. Defaults mirror the regimes the
/// acceptance suite exercises: 10,000 shots per circuit for tomography
/// and 100 x 1,000 shots for fold extrapolation.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::FullTomography;
  TargetSpec target = TargetSpec::ghz(4);
  NoiseModel noise;
  std::uint64_t shots_per_circuit = 10000;
  std::uint64_t seed = 1;
  bool qrem = false;
  std::optional<ZneConfig> zne;
  std::string output_path = "out";

  // Experiment-specific knobs.
  std::vector<int> ghz_qubit_counts;   // ghz_fidelity sweep
  bool shot_matched = false;           // qst_compare: split the DQST budget
  int mc_resamples = 500;              // tomography error bars; 0 disables
  std::uint64_t calibration_shots = 0; // 0 = exact confusion blocks
  int threads = 1;                     // 0 = hardware concurrency

  /// Checks experiment-specific requirements before any simulation runs.
  void validate() const;
};

ExperimentConfig config_from_json(const std::string& text);

/// Echo with every default made explicit; parsing the echo reproduces the
/// config. Byte-stable for identical configs.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace dqstlab

#endif  // DQSTLAB_CONFIG_HPP_
