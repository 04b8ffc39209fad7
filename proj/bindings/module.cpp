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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dqstlab/bootstrap.hpp"
#include "dqstlab/experiments.hpp"
#include "dqstlab/metrics.hpp"
#include "dqstlab/serialization.hpp"
#include "dqstlab/simulator.hpp"
#include "dqstlab/trajectory.hpp"
#include "dqstlab/twirl.hpp"

namespace py = pybind11;
using namespace dqstlab;

namespace {

NoiseModel make_noise(double two_qubit_depol,
                      const std::vector<std::pair<double, double>>& readout_flip,
                      double state_prep_depol) {
  NoiseModel noise;
  noise.two_qubit_depol = two_qubit_depol;
  for (const auto& [p01, p10] : readout_flip) {
    noise.readout.push_back({p01, p10});
  }
  noise.state_prep_depol = state_prep_depol;
  noise.validate();
  return noise;
}

Setting make_setting(const std::string& k, const std::string& basis, int fold) {
  return Setting(BitVector::from_string(k), basis_from_char(basis.at(0)), fold);
}

GhzCombination combo_from_string(const std::string& s) {
  if (s == "four_term") return GhzCombination::FourTerm;
  if (s == "two_plus_zero") return GhzCombination::TwoPlusZero;
  if (s == "two_plus_one") return GhzCombination::TwoPlusOne;
  throw std::invalid_argument("unknown estimator combination: " + s);
}

std::string signed_pauli_str(const SignedPauli& s) {
  std::string out = s.sign < 0 ? "-" : "";
  out += pauli_char(s.p);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Direct tomography simulator and estimation toolkit";

  py::class_<NoiseModel>(m, "NoiseModel")
      .def(py::init(&make_noise), py::arg("two_qubit_depol") = 0.0,
           py::arg("readout_flip") = std::vector<std::pair<double, double>>{},
           py::arg("state_prep_depol") = 0.0)
      .def_readonly("two_qubit_depol", &NoiseModel::two_qubit_depol)
      .def_readonly("state_prep_depol", &NoiseModel::state_prep_depol);

  py::class_<Setting>(m, "Setting")
      .def(py::init(&make_setting), py::arg("k"), py::arg("basis"),
           py::arg("fold") = 1)
      .def_property_readonly("k",
                             [](const Setting& s) { return s.k.to_string(); })
      .def_property_readonly(
          "basis", [](const Setting& s) { return std::string(1, basis_char(s.basis)); })
      .def_readonly("fold", &Setting::fold);

  py::class_<CountTable>(m, "CountTable")
      .def_readonly("shots", &CountTable::shots)
      .def_readonly("seed", &CountTable::seed)
      .def_readonly("counts", &CountTable::counts)
      .def_readonly("setting", &CountTable::setting)
      .def("frequencies",
           [](const CountTable& t) { return t.frequencies().p; })
      .def("to_text", &count_table_to_text)
      .def_static("from_text", &count_table_from_text);

  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def_property_readonly("num_bits", &ConfusionMatrix::num_bits)
      .def("dense", &ConfusionMatrix::dense)
      .def("apply", &ConfusionMatrix::apply)
      .def("solve", &ConfusionMatrix::solve);

  py::class_<ZneSeries>(m, "ZneSeries")
      .def_readonly("extrapolated", &ZneSeries::extrapolated)
      .def_readonly("slope", &ZneSeries::slope)
      .def_readonly("instance_values", &ZneSeries::instance_values)
      .def_property_readonly("points", [](const ZneSeries& s) {
        std::vector<std::tuple<int, double, double>> out;
        for (const ZnePoint& p : s.points) {
          out.emplace_back(p.fold, p.mean, p.std_err);
        }
        return out;
      });

  // --- states and metrics -------------------------------------------------
  m.def(
      "prepare_target",
      [](const std::string& kind, int n, const NoiseModel& noise) {
        TargetSpec spec{target_kind_from_string(kind), n, std::nullopt};
        return prepare_target(spec, noise).mat();
      },
      py::arg("kind"), py::arg("n"), py::arg("noise") = NoiseModel{});
  m.def("ideal_ket", [](const std::string& kind, int n) {
    return ideal_ket({target_kind_from_string(kind), n, std::nullopt}).amplitudes();
  });
  m.def("random_density_matrix", [](int n, std::uint64_t seed) {
    RngStream rng(seed);
    return random_density_matrix(n, rng).mat();
  });
  m.def("fidelity", [](const CMat& a, const CMat& b) {
    return fidelity(DensityMatrix(a), DensityMatrix(b));
  });
  m.def("pure_fidelity", [](const CVec& psi, const CMat& rho) {
    return pure_fidelity(Ket(psi), DensityMatrix(rho));
  });
  m.def("trace_distance", [](const CMat& a, const CMat& b) {
    return trace_distance(DensityMatrix(a), DensityMatrix(b));
  });
  m.def("pauli_matrix",
        [](const std::string& s) { return pauli_matrix(PauliString::parse(s)); });

  // --- simulation ----------------------------------------------------------
  m.def(
      "joint_state",
      [](const CMat& rho, const std::string& k, const NoiseModel& noise, int fold) {
        return joint_state(DensityMatrix(rho), BitVector::from_string(k), noise, fold)
            .mat();
      },
      py::arg("rho"), py::arg("k"), py::arg("noise") = NoiseModel{},
      py::arg("fold") = 1);
  m.def(
      "outcome_distribution",
      [](const CMat& joint, const std::string& basis, const NoiseModel& noise) {
        return outcome_distribution(DensityMatrix::trusted(joint),
                                    basis_from_char(basis.at(0)), noise)
            .p;
      },
      py::arg("joint"), py::arg("basis"), py::arg("noise") = NoiseModel{});
  m.def(
      "sample_shots",
      [](const std::vector<double>& probs, const Setting& setting,
         std::uint64_t shots, std::uint64_t seed) {
        OutcomeDistribution dist{setting.k.n(), probs};
        return sample_shots(dist, setting, shots, seed);
      },
      py::arg("probs"), py::arg("setting"), py::arg("shots"), py::arg("seed"));
  m.def("trajectory_ghz_counts", &trajectory_ghz_counts, py::arg("n"),
        py::arg("noise"), py::arg("fold"), py::arg("shots"), py::arg("seed"));
  m.def("measure_in_pauli_bases", [](const CMat& rho, const std::string& bases) {
    return measure_in_pauli_bases(DensityMatrix(rho), bases);
  });

  // --- estimation ----------------------------------------------------------
  m.def("enumerate_settings", &enumerate_settings);
  m.def("estimate_elements", [](const CountTable& counts) {
    std::vector<std::tuple<std::string, std::string, Complex, double, double>> out;
    for (const ElementEstimate& e : estimate_elements(counts)) {
      out.emplace_back(e.row.to_string(), e.col.to_string(), e.value, e.stderr_re,
                       e.stderr_im);
    }
    return out;
  });
  m.def(
      "reconstruct_from_counts",
      [](const std::vector<CountTable>& tables, const ConfusionMatrix* confusion) {
        std::vector<SettingEstimates> all;
        all.reserve(tables.size());
        int n = 0;
        for (const CountTable& t : tables) {
          n = t.n();
          if (confusion) {
            const OutcomeDistribution q = mitigate_counts(t, *confusion);
            all.push_back({t.setting, estimate_elements(t.setting, q.p, t.shots)});
          } else {
            all.push_back({t.setting, estimate_elements(t)});
          }
        }
        return reconstruct_raw(n, all).mat;
      },
      py::arg("tables"), py::arg("confusion") = nullptr);
  m.def("shots_for_accuracy", &shots_for_accuracy, py::arg("epsilon"),
        py::arg("delta_f"), py::arg("num_settings"));
  m.def(
      "ghz_fidelity_estimate",
      [](const CountTable& counts, const std::string& combo) {
        const ValueWithError v = ghz_fidelity_estimate(counts, combo_from_string(combo));
        return std::make_pair(v.value, v.std_err);
      },
      py::arg("counts"), py::arg("combo") = "four_term");

  // --- mitigation ----------------------------------------------------------
  m.def("exact_confusion", &exact_confusion, py::arg("noise"), py::arg("num_bits"));
  m.def("calibrate_confusion", &calibrate_confusion, py::arg("noise"),
        py::arg("num_bits"), py::arg("shots"), py::arg("seed"));
  m.def("calibrate_confusion_full", &calibrate_confusion_full, py::arg("noise"),
        py::arg("num_bits"), py::arg("shots"), py::arg("seed"));
  m.def("tensor_confusion", &tensor_confusion);
  m.def(
      "mitigate_counts",
      [](const CountTable& counts, const ConfusionMatrix& confusion, bool clip) {
        return mitigate_counts(counts, confusion, clip).p;
      },
      py::arg("counts"), py::arg("confusion"), py::arg("clip") = false);
  m.def("cz_twirl_sets", [] {
    std::vector<std::tuple<std::string, std::string, std::string, std::string>> out;
    for (const TwirlSet& t : cz_twirl_sets()) {
      out.emplace_back(signed_pauli_str(t.p1), signed_pauli_str(t.p2),
                       signed_pauli_str(t.p3), signed_pauli_str(t.p4));
    }
    return out;
  });
  m.def(
      "run_zne",
      [](const std::function<double(int, std::uint64_t, std::uint64_t)>& experiment,
         const std::vector<int>& folds, int twirl_instances,
         std::uint64_t shots_per_instance, std::uint64_t seed, bool weighted_fit) {
        return run_zne(experiment, folds, twirl_instances, shots_per_instance, seed,
                       weighted_fit);
      },
      py::arg("experiment"), py::arg("folds"), py::arg("twirl_instances"),
      py::arg("shots_per_instance"), py::arg("seed"),
      py::arg("weighted_fit") = false);
  m.def(
      "bootstrap_stats",
      [](const std::vector<double>& values, int resamples, std::uint64_t seed) {
        const ValueWithError v = bootstrap_stats(values, resamples, seed);
        return std::make_pair(v.value, v.std_err);
      },
      py::arg("values"), py::arg("resamples"), py::arg("seed"));

  // --- reconstruction ------------------------------------------------------
  m.def("project_physical", [](const CMat& raw) {
    const ProjectionReport report = project_physical(RawMatrix{raw});
    return std::make_tuple(report.output.mat(), report.frobenius_shift,
                           report.negative_mass_removed);
  });
  m.def("standard_qst",
        [](const std::vector<std::pair<std::string, std::vector<double>>>& data) {
          std::vector<PauliSettingData> settings;
          settings.reserve(data.size());
          for (const auto& [bases, probs] : data) {
            settings.push_back({bases, probs, 0});
          }
          return standard_qst(settings).mat;
        });
  m.def("enumerate_pauli_settings", &enumerate_pauli_settings);
  m.def("compare_states", [](const CMat& a, const CMat& b, const CVec& ideal) {
    const ComparisonReport r =
        compare_states(DensityMatrix(a), DensityMatrix(b), Ket(ideal));
    py::dict out;
    out["cross_fidelity"] = r.cross_fidelity;
    out["trace_distance"] = r.trace_dist;
    out["fidelity_a"] = r.fidelity_a;
    out["fidelity_b"] = r.fidelity_b;
    return out;
  });

  // --- pipelines -----------------------------------------------------------
  m.def(
      "simulate_dqst",
      [](const std::string& kind, int n, const NoiseModel& noise,
         std::uint64_t shots, std::uint64_t seed, bool qrem,
         std::uint64_t calibration_shots, int threads) {
        const DqstOutcome r =
            simulate_dqst({target_kind_from_string(kind), n, std::nullopt}, noise,
                          shots, seed, qrem, calibration_shots, threads);
        py::dict out;
        out["raw"] = r.raw.mat;
        out["projected"] = r.projected.mat();
        out["fidelity"] = r.fidelity_ideal;
        out["num_settings"] = r.counts.size();
        return out;
      },
      py::arg("kind"), py::arg("n"), py::arg("noise"), py::arg("shots"),
      py::arg("seed"), py::arg("qrem") = false, py::arg("calibration_shots") = 0,
      py::arg("threads") = 1);
  m.def("exact_ghz_fold_fidelity", &exact_ghz_fold_fidelity, py::arg("n"),
        py::arg("noise"), py::arg("fold"));
  m.def("make_dense_ghz_experiment", &make_dense_ghz_experiment, py::arg("n"),
        py::arg("noise"), py::arg("qrem") = false);
  m.def("make_trajectory_ghz_experiment", &make_trajectory_ghz_experiment,
        py::arg("n"), py::arg("noise"), py::arg("qrem") = false);
  m.def("run_experiment", [](const std::string& config_json) {
    const ResultBundle bundle = run_experiment(config_from_json(config_json));
    py::dict out;
    out["config_echo"] = bundle.config_echo;
    out["files"] = bundle.files;
    py::dict metrics;
    for (const MetricRow& row : bundle.metrics) {
      metrics[py::str(row.label)] = std::make_pair(row.value, row.std_err);
    }
    out["metrics"] = metrics;
    return out;
  });
}
