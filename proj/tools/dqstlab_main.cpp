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

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dqstlab/experiments.hpp"
#include "dqstlab/serialization.hpp"
#include "dqstlab/twirl.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNumericalError = 3;

struct GlobalOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> threads;
};

int run_kind(const GlobalOptions& opts, dqstlab::ExperimentKind kind) {
  dqstlab::ExperimentConfig cfg;
  try {
    if (opts.config_path.empty()) {
      throw std::invalid_argument("missing --config");
    }
    cfg = dqstlab::config_from_json(dqstlab::read_text_file(opts.config_path));
    if (cfg.experiment != kind) {
      throw std::invalid_argument("config experiment '" +
                                  dqstlab::to_string(cfg.experiment) +
                                  "' does not match the subcommand");
    }
    if (opts.seed) cfg.seed = *opts.seed;
    if (opts.out) cfg.output_path = *opts.out;
    if (opts.threads) cfg.threads = *opts.threads;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  try {
    const dqstlab::ResultBundle bundle = dqstlab::run_experiment(cfg);
    for (const dqstlab::MetricRow& m : bundle.metrics) {
      std::cout << m.label << " = " << m.value;
      if (m.std_err > 0.0) std::cout << " +/- " << m.std_err;
      std::cout << "\n";
    }
    std::cout << "wrote " << bundle.files.size() << " files to "
              << cfg.output_path << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalError;
  }
}

int print_twirl_table() {
  const auto& sets = dqstlab::cz_twirl_sets();
  std::cout << "p1,p2,p3,p4\n";
  for (const dqstlab::TwirlSet& t : sets) {
    const auto name = [](const dqstlab::SignedPauli& s) {
      std::string out = s.sign < 0 ? "-" : "";
      out += dqstlab::pauli_char(s.p);
      return out;
    };
    std::cout << name(t.p1) << ',' << name(t.p2) << ',' << name(t.p3) << ','
              << name(t.p4) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct tomography simulator and estimation toolkit"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--config", opts.config_path, "Experiment config (JSON)");
  std::uint64_t seed_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "Override the config seed");
  std::string out_val;
  auto* out_opt = app.add_option("--out", out_val, "Override the output directory");
  int threads_val = 0;
  auto* threads_opt =
      app.add_option("--threads", threads_val, "Worker threads (0 = all cores)");

  app.add_subcommand("tomography", "Full density-matrix reconstruction");
  app.add_subcommand("ghz", "GHZ fidelity vs qubit number");
  app.add_subcommand("compare", "Direct vs Pauli-settings tomography");
  app.add_subcommand("qrem", "Raw vs tensored confusion-matrix check");
  app.add_subcommand("zne", "Fold-extrapolation demo");
  app.add_subcommand("twirl-table", "Print the 16 CZ Pauli dressings");

  CLI11_PARSE(app, argc, argv);

  if (seed_opt->count()) opts.seed = seed_val;
  if (out_opt->count()) opts.out = out_val;
  if (threads_opt->count()) opts.threads = threads_val;

  const std::string sub = app.get_subcommands().front()->get_name();
  if (sub == "twirl-table") return print_twirl_table();
  if (sub == "tomography") return run_kind(opts, dqstlab::ExperimentKind::FullTomography);
  if (sub == "ghz") return run_kind(opts, dqstlab::ExperimentKind::GhzFidelity);
  if (sub == "compare") return run_kind(opts, dqstlab::ExperimentKind::QstCompare);
  if (sub == "qrem") return run_kind(opts, dqstlab::ExperimentKind::QremCheck);
  if (sub == "zne") return run_kind(opts, dqstlab::ExperimentKind::ZneDemo);
  std::cerr << "unknown subcommand\n";
  return kExitConfigError;
}
