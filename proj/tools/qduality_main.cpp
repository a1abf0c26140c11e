// Copyright 2026 The qduality Authors
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

// qduality command-line front end. Links only against the C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qduality/qduality.h"

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReportDeleter {
  void operator()(qd_report* r) const { qd_report_free(r); }
};
struct StateDeleter {
  void operator()(qd_state* s) const { qd_state_free(s); }
};
struct BasisDeleter {
  void operator()(qd_basis* b) const { qd_basis_free(b); }
};
using ReportPtr = std::unique_ptr<qd_report, ReportDeleter>;
using StatePtr = std::unique_ptr<qd_state, StateDeleter>;
using BasisPtr = std::unique_ptr<qd_basis, BasisDeleter>;

void check(qd_status status, const std::string& context) {
  if (status != QD_OK) {
    throw UsageError(context + ": " + qd_status_name(status) + ": " +
                     qd_last_error());
  }
}

std::string take_string(char* s) {
  std::string out = s != nullptr ? s : "";
  qd_string_free(s);
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

struct ExperimentFlags {
  std::map<std::string, double> values = {
      {"phi", 0.0},          {"bs2-alpha", std::numbers::pi / 4.0},
      {"x", 1.0},            {"amp-alpha-re", kInvSqrt2},
      {"amp-alpha-im", 0.0}, {"amp-beta-re", kInvSqrt2},
      {"amp-beta-im", 0.0},  {"eta", 1.0},
  };
  std::string bs2 = "present";
  std::string perspective;
  std::optional<long> click;
  std::vector<double> c_re{kInvSqrt2, kInvSqrt2};
  std::vector<double> c_im;

  void attach(CLI::App* app) {
    for (auto& [name, value] : values) {
      app->add_option("--" + name, value)->capture_default_str();
    }
    app->add_option("--bs2", bs2, "mzi: beam splitter 2 present or absent")
        ->check(CLI::IsMember({"present", "absent"}))
        ->capture_default_str();
    app->add_option("--perspective", perspective,
                    "measurement-model: alice or bob")
        ->check(CLI::IsMember({"alice", "bob"}));
    app->add_option("--click", click,
                    "measurement-model: pointer reading k seen by alice");
    app->add_option("--c-re", c_re, "measurement-model: Re c_k")->delimiter(',');
    app->add_option("--c-im", c_im, "measurement-model: Im c_k")->delimiter(',');
  }
};

const std::vector<std::string> kExperiments = {
    "mzi", "dce", "wave-detector", "measurement-model", "morphing"};

std::vector<double> orders_for(const std::optional<double>& q) {
  std::vector<double> orders{1.0, 2.0};
  if (q && *q != 1.0 && *q != 2.0) orders.push_back(*q);
  return orders;
}

ReportPtr run_experiment(const std::string& name, const ExperimentFlags& f,
                         const std::vector<double>& orders) {
  const auto& v = f.values;
  qd_report* raw = nullptr;
  qd_status status = QD_ERR_INVALID_ARGUMENT;
  if (name == "mzi") {
    status = qd_experiment_mzi(v.at("phi"), f.bs2 == "present", orders.data(),
                               orders.size(), &raw);
  } else if (name == "dce") {
    status = qd_experiment_dce(v.at("bs2-alpha"), v.at("phi"), orders.data(),
                               orders.size(), &raw);
  } else if (name == "wave-detector") {
    status = qd_experiment_wave_detector(
        v.at("x"), v.at("amp-alpha-re"), v.at("amp-alpha-im"),
        v.at("amp-beta-re"), v.at("amp-beta-im"), orders.data(), orders.size(),
        &raw);
  } else if (name == "measurement-model") {
    if (!f.c_im.empty() && f.c_im.size() != f.c_re.size()) {
      throw UsageError("--c-im must have as many entries as --c-re");
    }
    std::vector<double> amps;
    for (std::size_t k = 0; k < f.c_re.size(); ++k) {
      amps.push_back(f.c_re[k]);
      amps.push_back(f.c_im.empty() ? 0.0 : f.c_im[k]);
    }
    long outcome = -1;
    if (f.perspective == "alice" || (f.perspective.empty() && f.click)) {
      outcome = f.click.value_or(0);
    }
    status = qd_experiment_measurement_model(amps.data(), f.c_re.size(),
                                             outcome, orders.data(),
                                             orders.size(), &raw);
  } else if (name == "morphing") {
    status = qd_experiment_morphing(v.at("amp-alpha-re"), v.at("amp-alpha-im"),
                                    v.at("amp-beta-re"), v.at("amp-beta-im"),
                                    v.at("eta"), orders.data(), orders.size(),
                                    &raw);
  } else {
    throw UsageError("unknown experiment '" + name + "'");
  }
  check(status, "experiment " + name);
  return ReportPtr(raw);
}

int cmd_measures(const std::string& state_path,
                 const std::optional<std::string>& basis_path,
                 const std::optional<double>& q) {
  qd_state* state_raw = nullptr;
  check(qd_state_load(state_path.c_str(), &state_raw), state_path);
  StatePtr state(state_raw);
  BasisPtr basis;
  if (basis_path) {
    qd_basis* basis_raw = nullptr;
    check(qd_basis_load(basis_path->c_str(), &basis_raw), *basis_path);
    basis.reset(basis_raw);
  }
  qd_report* raw = nullptr;
  check(qd_measures(state.get(), basis.get(), q.value_or(1.0), &raw),
        "measures");
  ReportPtr report(raw);
  char* json = nullptr;
  check(qd_report_to_json(report.get(), &json), "measures");
  std::cout << take_string(json) << '\n';
  return kExitOk;
}

int cmd_experiment(const std::string& name, const ExperimentFlags& flags,
                   const std::optional<double>& q) {
  ReportPtr report = run_experiment(name, flags, orders_for(q));
  char* json = nullptr;
  check(qd_report_to_json(report.get(), &json), "experiment " + name);
  std::cout << take_string(json) << '\n';
  return kExitOk;
}

struct SweepSpec {
  std::string param;
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  std::string out;
};

int cmd_sweep(const std::string& name, const SweepSpec& spec,
              ExperimentFlags flags, const std::optional<double>& q) {
  if (spec.steps < 2) throw UsageError("--steps must be at least 2");
  if (!(spec.start <= spec.stop)) throw UsageError("--start must not exceed --stop");
  auto it = flags.values.find(spec.param);
  if (it == flags.values.end()) {
    throw UsageError("cannot sweep unknown parameter '" + spec.param + "'");
  }

  std::ostringstream csv;
  const auto orders = orders_for(q);
  for (int i = 0; i < spec.steps; ++i) {
    const double value =
        spec.start + (spec.stop - spec.start) * i / (spec.steps - 1);
    it->second = value;
    ReportPtr report = run_experiment(name, flags, orders);
    const size_t n = qd_report_scalar_count(report.get());
    if (i == 0) {
      csv << spec.param;
      for (size_t k = 0; k < n; ++k) {
        csv << ',' << qd_report_scalar_name(report.get(), k);
      }
      csv << '\n';
    }
    csv << format_number(value);
    for (size_t k = 0; k < n; ++k) {
      csv << ',' << format_number(qd_report_scalar_value(report.get(), k));
    }
    csv << '\n';
  }

  std::ofstream file(spec.out, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + spec.out + "'");
  file << csv.str();
  if (!file) throw UsageError("failed writing '" + spec.out + "'");
  return kExitOk;
}

int cmd_verify(bool as_json, double perturbation) {
  char* text = nullptr;
  int all_passed = 0;
  check(qd_verify(perturbation, as_json ? 1 : 0, &text, &all_passed), "verify");
  std::cout << take_string(text);
  if (as_json) std::cout << '\n';
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qduality: wavelike/particlelike information toolkit"};
  app.require_subcommand(1);

  std::optional<double> q;
  bool as_json = false;
  app.add_option("--q", q, "Tsallis order (1 = von Neumann)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", as_json, "machine-readable output where applicable");

  auto* measures = app.add_subcommand("measures", "information measures of a state file");
  std::string state_path;
  std::optional<std::string> basis_path;
  measures->add_option("state", state_path, "state JSON file")->required();
  measures->add_option("--basis", basis_path, "reference basis JSON file");

  auto* experiment = app.add_subcommand("experiment", "run one experiment");
  std::string experiment_name;
  ExperimentFlags experiment_flags;
  experiment->add_option("name", experiment_name)
      ->required()
      ->check(CLI::IsMember(kExperiments));
  experiment_flags.attach(experiment);

  auto* sweep = app.add_subcommand("sweep", "sweep one parameter into a CSV file");
  std::string sweep_name;
  SweepSpec spec;
  ExperimentFlags sweep_flags;
  sweep->add_option("name", sweep_name)->required()->check(CLI::IsMember(kExperiments));
  sweep->add_option("--param", spec.param, "swept flag name, e.g. phi")->required();
  sweep->add_option("--start", spec.start)->required();
  sweep->add_option("--stop", spec.stop)->required();
  sweep->add_option("--steps", spec.steps)->required();
  sweep->add_option("--out", spec.out, "CSV output path")->required();
  sweep_flags.attach(sweep);

  auto* verify = app.add_subcommand("verify", "run the built-in checks");
  double perturbation = 0.0;
  verify->add_option("--perturb", perturbation,
                     "offset added to every expected value (mutation testing)");

  for (auto* sub : {measures, experiment, sweep, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (measures->parsed()) return cmd_measures(state_path, basis_path, q);
    if (experiment->parsed()) {
      return cmd_experiment(experiment_name, experiment_flags, q);
    }
    if (sweep->parsed()) return cmd_sweep(sweep_name, spec, sweep_flags, q);
    if (verify->parsed()) return cmd_verify(as_json, perturbation);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
