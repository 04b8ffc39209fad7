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

#include "dqstlab/config.hpp"

#include <stdexcept>

#include <json.hpp>

namespace dqstlab {

using ordered_json = nlohmann::ordered_json;

ExperimentKind experiment_kind_from_string(const std::string& s) {
  if (s == "full_tomography") return ExperimentKind::FullTomography;
  if (s == "ghz_fidelity") return ExperimentKind::GhzFidelity;
  if (s == "qst_compare") return ExperimentKind::QstCompare;
  if (s == "qrem_check") return ExperimentKind::QremCheck;
  if (s == "zne_demo") return ExperimentKind::ZneDemo;
  throw std::invalid_argument("unknown experiment: " + s);
}

std::string to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::FullTomography:
      return "full_tomography";
    case ExperimentKind::GhzFidelity:
      return "ghz_fidelity";
    case ExperimentKind::QstCompare:
      return "qst_compare";
    case ExperimentKind::QremCheck:
      return "qrem_check";
    case ExperimentKind::ZneDemo:
      return "zne_demo";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  noise.validate();
  if (shots_per_circuit < 1) {
    throw std::invalid_argument("config: shots_per_circuit must be positive");
  }
  if (target.n < 1) {
    throw std::invalid_argument("config: target size must be positive");
  }
  if (threads < 0) {
    throw std::invalid_argument("config: threads must be >= 0");
  }
  if (mc_resamples < 0) {
    throw std::invalid_argument("config: mc_resamples must be >= 0");
  }
  switch (experiment) {
    case ExperimentKind::FullTomography:
      if (target.n > 6) {
        throw std::invalid_argument("config: full tomography is capped at 6 qubits");
      }
      break;
    case ExperimentKind::GhzFidelity:
      if (ghz_qubit_counts.empty()) {
        throw std::invalid_argument("config: ghz_fidelity needs ghz_qubit_counts");
      }
      for (int n : ghz_qubit_counts) {
        if (n < 1 || n > 20) {
          throw std::invalid_argument("config: sweep sizes must be in [1, 20]");
        }
      }
      if (target.kind != TargetKind::GHZ) {
        throw std::invalid_argument("config: the fidelity sweep targets GHZ states");
      }
      break;
    case ExperimentKind::QstCompare:
      if (target.n > 5) {
        throw std::invalid_argument("config: qst_compare is capped at 5 qubits");
      }
      break;
    case ExperimentKind::QremCheck:
      if (target.n > 6) {
        throw std::invalid_argument("config: qrem_check is capped at 6 qubits");
      }
      break;
    case ExperimentKind::ZneDemo:
      if (!zne) {
        throw std::invalid_argument("config: zne_demo needs a zne block");
      }
      if (target.n > 6) {
        throw std::invalid_argument("config: zne_demo is capped at 6 qubits");
      }
      break;
  }
  if (zne) {
    if (zne->folds.size() < 2) {
      throw std::invalid_argument("config: zne needs at least two folds");
    }
    for (int f : zne->folds) {
      if (f < 1 || f % 2 == 0) {
        throw std::invalid_argument("config: zne folds must be odd");
      }
    }
    if (zne->twirl_instances < 1 || zne->shots_per_instance < 1) {
      throw std::invalid_argument("config: zne instance counts must be positive");
    }
  }
}

ExperimentConfig config_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
  }
  ExperimentConfig cfg;
  try {
    cfg.experiment = experiment_kind_from_string(j.at("experiment").get<std::string>());
    const auto& t = j.at("target");
    cfg.target.kind = target_kind_from_string(t.at("kind").get<std::string>());
    cfg.target.n = t.at("n").get<int>();

    if (j.contains("noise")) {
      const auto& nj = j.at("noise");
      cfg.noise.two_qubit_depol = nj.value("two_qubit_depol", 0.0);
      cfg.noise.state_prep_depol = nj.value("state_prep_depol", 0.0);
      if (nj.contains("readout_flip")) {
        const auto& r = nj.at("readout_flip");
        cfg.noise.readout.clear();
        if (!r.empty() && r.at(0).is_array()) {
          for (const auto& pair : r) {
            cfg.noise.readout.push_back(
                {pair.at(0).get<double>(), pair.at(1).get<double>()});
          }
        } else if (!r.empty()) {
          cfg.noise.readout.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
        }
      }
    }
    cfg.shots_per_circuit = j.value("shots_per_circuit", std::uint64_t{10000});
    cfg.seed = j.value("seed", std::uint64_t{1});
    if (j.contains("mitigation")) {
      const auto& mj = j.at("mitigation");
      cfg.qrem = mj.value("qrem", false);
      if (mj.contains("zne") && !mj.at("zne").is_null()) {
        const auto& zj = mj.at("zne");
        ZneConfig z;
        z.folds = zj.value("folds", std::vector<int>{1, 3, 5});
        z.twirl_instances = zj.value("twirl_instances", 100);
        z.shots_per_instance = zj.value("shots_per_instance", std::uint64_t{1000});
        cfg.zne = z;
      }
    }
    cfg.output_path = j.value("output_path", std::string("out"));
    cfg.ghz_qubit_counts = j.value("ghz_qubit_counts", std::vector<int>{});
    cfg.shot_matched = j.value("shot_matched", false);
    cfg.mc_resamples = j.value("mc_resamples", 500);
    cfg.calibration_shots = j.value("calibration_shots", std::uint64_t{0});
    cfg.threads = j.value("threads", 1);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["format_version"] = 1;
  j["experiment"] = to_string(cfg.experiment);
  j["target"] = {{"kind", to_string(cfg.target.kind)}, {"n", cfg.target.n}};
  ordered_json noise;
  noise["two_qubit_depol"] = cfg.noise.two_qubit_depol;
  ordered_json flips = ordered_json::array();
  for (const auto& r : cfg.noise.readout) {
    flips.push_back(ordered_json::array({r.p01, r.p10}));
  }
  noise["readout_flip"] = flips;
  noise["state_prep_depol"] = cfg.noise.state_prep_depol;
  j["noise"] = noise;
  j["shots_per_circuit"] = cfg.shots_per_circuit;
  j["seed"] = cfg.seed;
  ordered_json mit;
  mit["qrem"] = cfg.qrem;
  if (cfg.zne) {
    mit["zne"] = {{"folds", cfg.zne->folds},
                  {"twirl_instances", cfg.zne->twirl_instances},
                  {"shots_per_instance", cfg.zne->shots_per_instance}};
  } else {
    mit["zne"] = nullptr;
  }
  j["mitigation"] = mit;
  j["output_path"] = cfg.output_path;
  j["ghz_qubit_counts"] = cfg.ghz_qubit_counts;
  j["shot_matched"] = cfg.shot_matched;
  j["mc_resamples"] = cfg.mc_resamples;
  j["calibration_shots"] = cfg.calibration_shots;
  j["threads"] = cfg.threads;
  return j.dump(2) + "\n";
}

}  // namespace dqstlab
