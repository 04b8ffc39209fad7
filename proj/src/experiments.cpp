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

#include "dqstlab/experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "dqstlab/gates.hpp"
#include "dqstlab/ghz_estimator.hpp"
#include "dqstlab/metrics.hpp"
#include "dqstlab/parallel.hpp"
#include "dqstlab/rng.hpp"
#include "dqstlab/serialization.hpp"
#include "dqstlab/simulator.hpp"
#include "dqstlab/trajectory.hpp"
#include "dqstlab/twirl.hpp"

namespace dqstlab {

namespace {

namespace fs = std::filesystem;

// Stream labels keep every derived seed distinct per purpose.
constexpr std::uint64_t kStreamCounts = 0x636f756e74ULL;
constexpr std::uint64_t kStreamCalib = 0x63616c6962ULL;
constexpr std::uint64_t kStreamResample = 0x726573616dULL;
constexpr std::uint64_t kStreamQst = 0x717374ULL;
constexpr std::uint64_t kStreamTwirl = 0x747769726cULL;
constexpr std::uint64_t kStreamGhz = 0x67687aULL;

ConfusionMatrix make_confusion(const NoiseModel& noise, int bits,
                               std::uint64_t calibration_shots,
                               std::uint64_t seed) {
  if (calibration_shots == 0) return exact_confusion(noise, bits);
  return calibrate_confusion(noise, bits, calibration_shots,
                             derive_stream(seed, {kStreamCalib}).next_u64());
}

std::vector<SettingEstimates> estimate_all(
    const std::vector<CountTable>& counts, bool qrem,
    const ConfusionMatrix* confusion, int threads) {
  std::vector<SettingEstimates> estimates(counts.size());
  parallel_for(counts.size(), threads, [&](std::size_t i) {
    const CountTable& table = counts[i];
    if (qrem) {
      const OutcomeDistribution q = mitigate_counts(table, *confusion);
      estimates[i] = SettingEstimates{
          table.setting, estimate_elements(table.setting, q.p, table.shots)};
    } else {
      estimates[i] = SettingEstimates{table.setting, estimate_elements(table)};
    }
  });
  return estimates;
}

double projected_fidelity(const std::vector<SettingEstimates>& estimates, int n,
                          const Ket& ideal) {
  const RawMatrix raw = reconstruct_raw(n, estimates);
  return pure_fidelity(ideal, project_physical(raw).output);
}

}  // namespace

DqstOutcome simulate_dqst(const TargetSpec& target, const NoiseModel& noise,
                          std::uint64_t shots_per_setting, std::uint64_t seed,
                          bool qrem, std::uint64_t calibration_shots, int threads) {
  const DensityMatrix rho = prepare_target(target, noise);
  const int n = target.n;
  const std::vector<Setting> settings = enumerate_settings(n);

  std::vector<CountTable> counts(settings.size());
  parallel_for(settings.size(), threads, [&](std::size_t i) {
    const OutcomeDistribution dist = setting_distribution(rho, settings[i], noise);
    const std::uint64_t child =
        derive_stream(seed, {kStreamCounts, static_cast<std::uint64_t>(i)}).next_u64();
    counts[i] = sample_shots(dist, settings[i], shots_per_setting, child);
  });

  std::optional<ConfusionMatrix> confusion;
  if (qrem) {
    confusion = make_confusion(noise, n + 1, calibration_shots, seed);
  }
  std::vector<SettingEstimates> estimates =
      estimate_all(counts, qrem, confusion ? &*confusion : nullptr, threads);

  RawMatrix raw = reconstruct_raw(n, estimates);
  ProjectionReport report = project_physical(raw);
  const Ket ideal = ideal_ket(target);
  const double fid = pure_fidelity(ideal, report.output);
  return DqstOutcome{std::move(counts), std::move(estimates), std::move(raw),
                     std::move(report.output), fid};
}

StandardQstOutcome simulate_standard_qst(const TargetSpec& target,
                                         const NoiseModel& noise,
                                         std::uint64_t shots_per_setting,
                                         std::uint64_t seed, bool qrem,
                                         std::uint64_t calibration_shots,
                                         int threads) {
  const DensityMatrix rho = prepare_target(target, noise);
  const int n = target.n;
  const std::vector<std::string> bases = enumerate_pauli_settings(n);

  std::optional<ConfusionMatrix> confusion;
  if (qrem) {
    confusion = make_confusion(noise, n, calibration_shots, seed);
  }

  std::vector<PauliSettingData> settings(bases.size());
  parallel_for(bases.size(), threads, [&](std::size_t i) {
    std::vector<double> probs = measure_in_pauli_bases(rho, bases[i]);
    apply_readout_channel(probs, noise, n);
    RngStream rng = derive_stream(seed, {kStreamQst, static_cast<std::uint64_t>(i)});
    const std::vector<std::uint64_t> drawn =
        multinomial_sample(probs, shots_per_setting, rng);
    std::vector<double> freq(drawn.size());
    for (std::size_t b = 0; b < drawn.size(); ++b) {
      freq[b] = static_cast<double>(drawn[b]) / static_cast<double>(shots_per_setting);
    }
    if (qrem) freq = mitigate_probs(*confusion, freq);
    settings[i] = PauliSettingData{bases[i], std::move(freq), shots_per_setting};
  });

  RawMatrix raw = standard_qst(settings);
  ProjectionReport report = project_physical(raw);
  const Ket ideal = ideal_ket(target);
  const double fid = pure_fidelity(ideal, report.output);
  return StandardQstOutcome{std::move(settings), std::move(raw),
                            std::move(report.output), fid};
}

ValueWithError mc_fidelity_stderr(const DqstOutcome& outcome, const Ket& ideal,
                                  bool qrem, std::uint64_t calibration_shots,
                                  const NoiseModel& noise, int resamples,
                                  std::uint64_t seed, int threads) {
  if (resamples < 2) {
    throw std::invalid_argument("mc_fidelity_stderr: need at least two resamples");
  }
  const int n = outcome.counts.front().n();
  std::optional<ConfusionMatrix> confusion;
  if (qrem) {
    confusion = make_confusion(noise, n + 1, calibration_shots, seed);
  }

  std::vector<double> fids(static_cast<std::size_t>(resamples));
  parallel_for(fids.size(), threads, [&](std::size_t r) {
    std::vector<SettingEstimates> estimates(outcome.counts.size());
    for (std::size_t i = 0; i < outcome.counts.size(); ++i) {
      const CountTable& table = outcome.counts[i];
      RngStream rng = derive_stream(
          seed, {kStreamResample, static_cast<std::uint64_t>(r),
                 static_cast<std::uint64_t>(i)});
      CountTable resampled = table;
      resampled.counts = multinomial_sample(table.frequencies().p, table.shots, rng);
      if (qrem) {
        const OutcomeDistribution q = mitigate_counts(resampled, *confusion);
        estimates[i] = SettingEstimates{
            table.setting, estimate_elements(table.setting, q.p, table.shots)};
      } else {
        estimates[i] = SettingEstimates{table.setting, estimate_elements(resampled)};
      }
    }
    fids[r] = projected_fidelity(estimates, n, ideal);
  });

  double mean = 0.0;
  for (double f : fids) mean += f;
  mean /= static_cast<double>(resamples);
  double var = 0.0;
  for (double f : fids) var += (f - mean) * (f - mean);
  var /= static_cast<double>(resamples - 1);
  return {mean, std::sqrt(var)};
}

FoldExperiment make_dense_ghz_experiment(int n, const NoiseModel& noise, bool qrem) {
  if (n > kDenseQubitCap) {
    throw std::invalid_argument("dense GHZ experiment capped at 10 qubits");
  }
  const std::optional<ConfusionMatrix> confusion =
      qrem ? std::optional<ConfusionMatrix>(exact_confusion(noise, n + 1))
           : std::nullopt;
  return [n, noise, confusion](int fold, std::uint64_t shots,
                               std::uint64_t seed) -> double {
    const DensityMatrix rho = prepare_target(TargetSpec::ghz(n), noise);
    const Eigen::Index d = rho.dim();
    CMat joint = CMat::Zero(2 * d, 2 * d);
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        const Complex half = 0.5 * rho.mat()(a, b);
        joint(2 * a, 2 * b) = half;
        joint(2 * a, 2 * b + 1) = half;
        joint(2 * a + 1, 2 * b) = half;
        joint(2 * a + 1, 2 * b + 1) = half;
      }
    }
    RngStream twirl_rng = derive_stream(seed, {kStreamTwirl});
    const int meter = n;
    for (int rep = 0; rep < fold; ++rep) {
      for (int q = 0; q < n; ++q) {
        apply_twirled_cnot(joint, meter, q, random_twirl_set(twirl_rng));
        if (noise.two_qubit_depol > 0.0) {
          depolarize_pair(joint, meter, q, noise.two_qubit_depol);
        }
      }
    }
    const DensityMatrix joint_dm = DensityMatrix::trusted(std::move(joint));
    const OutcomeDistribution dist = outcome_distribution(joint_dm, Basis::X, noise);
    const Setting setting(BitVector::ones(n), Basis::X, fold);
    const CountTable counts = sample_shots(
        dist, setting, shots, derive_stream(seed, {kStreamGhz}).next_u64());
    const std::vector<double> probs =
        confusion ? mitigate_counts(counts, *confusion).p : counts.frequencies().p;
    return ghz_fidelity_estimate(n, probs, shots).value;
  };
}

FoldExperiment make_trajectory_ghz_experiment(int n, const NoiseModel& noise,
                                              bool qrem) {
  const std::optional<ConfusionMatrix> confusion =
      qrem ? std::optional<ConfusionMatrix>(exact_confusion(noise, n + 1))
           : std::nullopt;
  return [n, noise, confusion](int fold, std::uint64_t shots,
                               std::uint64_t seed) -> double {
    const CountTable counts = trajectory_ghz_counts(n, noise, fold, shots, seed);
    const std::vector<double> probs =
        confusion ? mitigate_counts(counts, *confusion).p : counts.frequencies().p;
    return ghz_fidelity_estimate(n, probs, shots).value;
  };
}

double exact_ghz_fold_fidelity(int n, const NoiseModel& noise, int fold) {
  const DensityMatrix rho = prepare_target(TargetSpec::ghz(n), noise);
  const DensityMatrix joint = joint_state(rho, BitVector::ones(n), noise, fold);
  const OutcomeDistribution dist = outcome_distribution(joint, Basis::X, noise);
  return ghz_fidelity_estimate(n, dist.p, 0).value;
}

// =========================================================================
// Orchestration
// =========================================================================

namespace {

class BundleWriter {
 public:
  BundleWriter(const ExperimentConfig& cfg) : root_(cfg.output_path) {
    fs::create_directories(root_);
    bundle_.config_echo = config_to_json(cfg);
    emit("config_echo.json", bundle_.config_echo);
    start_ = std::chrono::steady_clock::now();
  }

  void emit(const std::string& rel, const std::string& content) {
    const fs::path p = root_ / rel;
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    write_text_file(p.string(), content);
    bundle_.files.push_back(rel);
  }

  void metric(const std::string& label, double value, double std_err = 0.0) {
    bundle_.metrics.push_back({label, value, std_err});
  }

  ResultBundle finish(std::uint64_t seed) {
    std::ostringstream metrics;
    metrics << "label,value,std_err\n";
    for (const MetricRow& m : bundle_.metrics) {
      metrics << m.label << ',' << format_double(m.value) << ','
              << format_double(m.std_err) << "\n";
    }
    emit("metrics.csv", metrics.str());

    // Wall clock and stream provenance; the only file that differs
    // between identical re-runs.
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start_);
    std::ostringstream info;
    info << "root_seed: " << seed << "\n";
    info << "wall_clock_ms: " << elapsed.count() << "\n";
    const fs::path p = root_ / "run_info.txt";
    write_text_file(p.string(), info.str());
    bundle_.files.push_back("run_info.txt");
    return std::move(bundle_);
  }

 private:
  fs::path root_;
  ResultBundle bundle_;
  std::chrono::steady_clock::time_point start_;
};

std::string counts_filename(std::size_t index, const Setting& s) {
  std::ostringstream name;
  name << "counts/setting_";
  name.width(3);
  name.fill('0');
  name << index;
  name << "_k" << s.k.to_string() << '_' << basis_char(s.basis) << ".txt";
  return name.str();
}

std::string matrix_table_csv(const CMat& mat) {
  const int n = log2_dim(mat.rows());
  std::ostringstream os;
  os << "row_bits,col_bits,re,im\n";
  for (Eigen::Index r = 0; r < mat.rows(); ++r) {
    for (Eigen::Index c = 0; c < mat.cols(); ++c) {
      os << BitVector(n, static_cast<std::uint64_t>(r)).to_string() << ','
         << BitVector(n, static_cast<std::uint64_t>(c)).to_string() << ','
         << format_double(mat(r, c).real()) << ','
         << format_double(mat(r, c).imag()) << "\n";
    }
  }
  return os.str();
}

}  // namespace

ResultBundle run_full_tomography(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::FullTomography) {
    throw std::invalid_argument("run_full_tomography: wrong experiment kind");
  }
  BundleWriter out(cfg);

  DqstOutcome r = simulate_dqst(cfg.target, cfg.noise, cfg.shots_per_circuit,
                                cfg.seed, cfg.qrem, cfg.calibration_shots,
                                cfg.threads);
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    out.emit(counts_filename(i, r.counts[i].setting),
             count_table_to_text(r.counts[i]));
  }
  out.emit("estimates.txt", estimates_to_text(r.estimates));
  out.emit("raw_matrix.json", matrix_to_json(r.raw.mat));
  out.emit("projected_matrix.json", matrix_to_json(r.projected.mat()));
  out.emit("projected_matrix_table.csv", matrix_table_csv(r.projected.mat()));

  const Ket ideal = ideal_ket(cfg.target);
  double std_err = 0.0;
  if (cfg.mc_resamples > 0) {
    const ValueWithError mc =
        mc_fidelity_stderr(r, ideal, cfg.qrem, cfg.calibration_shots, cfg.noise,
                           cfg.mc_resamples, cfg.seed, cfg.threads);
    std_err = mc.std_err;
  }
  out.metric("fidelity_projected", r.fidelity_ideal, std_err);
  out.metric("settings", static_cast<double>(r.counts.size()));
  out.metric("hermiticity_defect_raw", hermiticity_defect(r.raw.mat));
  return out.finish(cfg.seed);
}

ResultBundle run_ghz_fidelity_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::GhzFidelity) {
    throw std::invalid_argument("run_ghz_fidelity_sweep: wrong experiment kind");
  }
  BundleWriter out(cfg);

  std::ostringstream csv;
  csv << "n,fidelity,std_err,method\n";
  for (int n : cfg.ghz_qubit_counts) {
    const std::uint64_t seed_n =
        derive_stream(cfg.seed, {kStreamGhz, static_cast<std::uint64_t>(n)})
            .next_u64();
    if (cfg.zne) {
      const FoldExperiment exp =
          make_trajectory_ghz_experiment(n, cfg.noise, cfg.qrem);
      const ZneSeries series =
          run_zne(exp, cfg.zne->folds, cfg.zne->twirl_instances,
                  cfg.zne->shots_per_instance, seed_n);
      out.emit("zne_n" + std::to_string(n) + ".txt", zne_to_text(series));
      csv << n << ',' << format_double(series.extrapolated) << ','
          << format_double(series.points.front().std_err) << ",zne\n";
      out.metric("fidelity_n" + std::to_string(n), series.extrapolated,
                 series.points.front().std_err);
    } else {
      const CountTable counts =
          trajectory_ghz_counts(n, cfg.noise, 1, cfg.shots_per_circuit, seed_n);
      out.emit(counts_filename(static_cast<std::size_t>(n), counts.setting),
               count_table_to_text(counts));
      ValueWithError est;
      if (cfg.qrem) {
        const ConfusionMatrix confusion = make_confusion(
            cfg.noise, n + 1, cfg.calibration_shots, seed_n);
        est = ghz_fidelity_estimate(n, mitigate_counts(counts, confusion).p,
                                    counts.shots);
      } else {
        est = ghz_fidelity_estimate(counts);
      }
      csv << n << ',' << format_double(est.value) << ','
          << format_double(est.std_err) << ",direct\n";
      out.metric("fidelity_n" + std::to_string(n), est.value, est.std_err);
    }
  }
  out.emit("fidelity_vs_n.csv", csv.str());
  return out.finish(cfg.seed);
}

ResultBundle run_qst_compare(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::QstCompare) {
    throw std::invalid_argument("run_qst_compare: wrong experiment kind");
  }
  BundleWriter out(cfg);

  const DqstOutcome dqst =
      simulate_dqst(cfg.target, cfg.noise, cfg.shots_per_circuit, cfg.seed,
                    cfg.qrem, cfg.calibration_shots, cfg.threads);

  // Shot-matched mode divides the DQST total evenly over the 3^n bases.
  const std::size_t num_bases =
      enumerate_pauli_settings(cfg.target.n).size();
  std::uint64_t qst_shots = cfg.shots_per_circuit;
  if (cfg.shot_matched) {
    const std::uint64_t total =
        cfg.shots_per_circuit * enumerate_settings(cfg.target.n).size();
    qst_shots = total / num_bases;
    if (qst_shots == 0) {
      throw std::invalid_argument("qst_compare: shot budget too small to match");
    }
  }
  const StandardQstOutcome qst = simulate_standard_qst(
      cfg.target, cfg.noise, qst_shots,
      derive_stream(cfg.seed, {kStreamQst}).next_u64(), cfg.qrem,
      cfg.calibration_shots, cfg.threads);

  const Ket ideal = ideal_ket(cfg.target);
  const ComparisonReport cmp = compare_states(dqst.projected, qst.projected, ideal);

  out.emit("dqst_projected.json", matrix_to_json(dqst.projected.mat()));
  out.emit("qst_projected.json", matrix_to_json(qst.projected.mat()));
  out.metric("cross_fidelity", cmp.cross_fidelity);
  out.metric("trace_distance", cmp.trace_dist);
  out.metric("fidelity_dqst", cmp.fidelity_a);
  out.metric("fidelity_qst", cmp.fidelity_b);
  out.metric("qst_shots_per_circuit", static_cast<double>(qst_shots));
  out.metric("qst_settings", static_cast<double>(num_bases));
  return out.finish(cfg.seed);
}

ResultBundle run_qrem_check(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::QremCheck) {
    throw std::invalid_argument("run_qrem_check: wrong experiment kind");
  }
  BundleWriter out(cfg);
  const int n = cfg.target.n;

  const ConfusionMatrix raw = calibrate_confusion_full(
      cfg.noise, n, cfg.calibration_shots,
      derive_stream(cfg.seed, {kStreamCalib, 0}).next_u64());
  const ConfusionMatrix tensor = [&] {
    if (cfg.calibration_shots == 0) {
      return tensor_confusion(exact_confusion(cfg.noise, n));
    }
    return tensor_confusion(calibrate_confusion(
        cfg.noise, n, cfg.calibration_shots,
        derive_stream(cfg.seed, {kStreamCalib, 1}).next_u64()));
  }();

  // C_raw^-1 C_tensor, column by column.
  const Eigen::MatrixXd dense_tensor = tensor.dense();
  const Eigen::Index d = dense_tensor.rows();
  Eigen::MatrixXd product(d, d);
  for (Eigen::Index c = 0; c < d; ++c) {
    const Eigen::VectorXd col = dense_tensor.col(c);
    const std::vector<double> solved =
        raw.solve(std::vector<double>(col.data(), col.data() + col.size()));
    for (Eigen::Index r = 0; r < d; ++r) {
      product(r, c) = solved[static_cast<std::size_t>(r)];
    }
  }
  const Eigen::MatrixXd deviation = product - Eigen::MatrixXd::Identity(d, d);

  out.emit("confusion_raw.txt", confusion_to_text(raw));
  out.emit("confusion_tensor.txt", confusion_to_text(tensor));
  std::ostringstream grid;
  grid << "row,col,product,deviation\n";
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      grid << r << ',' << c << ',' << format_double(product(r, c)) << ','
           << format_double(deviation(r, c)) << "\n";
    }
  }
  out.emit("inverse_product_grid.csv", grid.str());
  out.metric("max_identity_deviation", deviation.cwiseAbs().maxCoeff());
  return out.finish(cfg.seed);
}

ResultBundle run_zne_demo(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.experiment != ExperimentKind::ZneDemo) {
    throw std::invalid_argument("run_zne_demo: wrong experiment kind");
  }
  BundleWriter out(cfg);
  const int n = cfg.target.n;

  const FoldExperiment exp = make_dense_ghz_experiment(n, cfg.noise, cfg.qrem);
  const ZneSeries series = run_zne(exp, cfg.zne->folds, cfg.zne->twirl_instances,
                                   cfg.zne->shots_per_instance, cfg.seed);
  out.emit("zne_series.txt", zne_to_text(series));

  std::ostringstream csv;
  csv << "fold,mean,std_err,exact\n";
  for (const ZnePoint& p : series.points) {
    csv << p.fold << ',' << format_double(p.mean) << ','
        << format_double(p.std_err) << ','
        << format_double(exact_ghz_fold_fidelity(n, cfg.noise, p.fold)) << "\n";
  }
  out.emit("zne_series.csv", csv.str());

  const double noiseless = exact_ghz_fold_fidelity(n, NoiseModel::ideal(), 1);
  out.metric("extrapolated", series.extrapolated);
  out.metric("slope", series.slope);
  out.metric("fold1_mean", series.points.front().mean,
             series.points.front().std_err);
  out.metric("noiseless_exact", noiseless);
  return out.finish(cfg.seed);
}

ResultBundle run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case ExperimentKind::FullTomography:
      return run_full_tomography(cfg);
    case ExperimentKind::GhzFidelity:
      return run_ghz_fidelity_sweep(cfg);
    case ExperimentKind::QstCompare:
      return run_qst_compare(cfg);
    case ExperimentKind::QremCheck:
      return run_qrem_check(cfg);
    case ExperimentKind::ZneDemo:
      return run_zne_demo(cfg);
  }
  throw std::invalid_argument("run_experiment: unknown experiment kind");
}

}  // namespace dqstlab
