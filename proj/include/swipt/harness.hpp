// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "swipt/sysmodel.hpp"

namespace swipt::harness {

enum class Experiment { MoopRegion, MoopPairwise, SecureSweep, SolverSelftest };

const char* to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

struct Config {
  Experiment experiment = Experiment::SolverSelftest;
  std::string preset;  // "table-2.1" or "table-3.1"
  std::uint64_t seed = 1;
  int trials = 200;
  double weight_step = 0.04;
  int zero_axis = 3;  // pairwise sweeps hold this weight at zero
  bool throughput_baseline = false;
  std::vector<int> antennas;
  std::vector<double> sinr_req_db;
  bool single_user_detection = false;
  int workers = 1;
  std::string out_dir = "out";
  // Self-test only: solver gap tolerance, loosened for the negative control. The
  // feasibility tolerance is raised to match when it is looser than the default.
  double selftest_gap_tol = 1e-10;
  SystemParams sep;
  // Shared secure fields; per-user vectors are sized from the scalars below.
  SecureParams secure;
  double r_max = 1.0;  // bits/s/Hz
  double p_req1 = 1e-3;  // W
  double p_req2 = 1e-3;  // W

  void validate() const;
};

SecureParams secure_params(const Config& cfg, int n_tx, double gamma_req_db);

// Preset defaults for an experiment before any file or command-line overrides.
Config defaults(Experiment e);

// Applies key = value lines; '#' starts a comment. Physical values are given in table units
// (dBm, mW, MHz, kHz, m) and converted here.
void apply_text(Config& cfg, const std::string& text, const std::string& origin = "config");
void apply_setting(Config& cfg, const std::string& key, const std::string& value);
Config load_config(Experiment e, const std::string& path);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::string csv() const;
  std::string tsv() const;
};

struct RunResult {
  Table rows;
  Table aggregate;
  Table summary;
  int failed_rows = 0;       // solver did not return an optimum
  int invariant_failures = 0;
  std::vector<std::string> messages;
};

RunResult execute(const Config& cfg);

// Writes <experiment>_rows.csv, <experiment>_aggregate.csv, <experiment>_summary.tsv and
// manifest.json; returns the process exit code.
int run(const Config& cfg, std::ostream& log);

std::string version();

// Per-row numeric formatting shared by every table.
std::string fmt(double v);

// Runs fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(int n, int workers, const std::function<void(int)>& fn);

}  // namespace swipt::harness
