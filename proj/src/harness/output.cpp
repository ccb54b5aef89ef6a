// SPDX-License-Identifier: Apache-2.0
#include <atomic>
#include <cmath>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "swipt/harness.hpp"

#ifndef SWIPT_VERSION
#define SWIPT_VERSION "unknown"
#endif

namespace swipt::harness {

namespace {

std::string join(const std::vector<std::string>& cells, char sep) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += sep;
    out += cells[i];
  }
  return out + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
}

}  // namespace

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  // Shortest text that reads back to the same double.
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string Table::csv() const {
  std::string out = join(columns, ',');
  for (const auto& r : rows) out += join(r, ',');
  return out;
}

std::string Table::tsv() const {
  std::string out = join(columns, '\t');
  for (const auto& r : rows) out += join(r, '\t');
  return out;
}

std::string version() { return SWIPT_VERSION; }

void parallel_for(int n, int workers, const std::function<void(int)>& fn) {
  const int k = std::max(1, std::min(workers, n));
  if (k == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < k; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

int run(const Config& cfg, std::ostream& log) {
  const RunResult r = execute(cfg);
  const std::filesystem::path dir(cfg.out_dir);
  std::filesystem::create_directories(dir);
  const std::string stem = to_string(cfg.experiment);
  const std::vector<std::string> files{stem + "_rows.csv", stem + "_aggregate.csv", stem + "_summary.tsv",
                                       "manifest.json"};
  write_file(dir / files[0], r.rows.csv());
  write_file(dir / files[1], r.aggregate.csv());
  write_file(dir / files[2], r.summary.tsv());

  nlohmann::ordered_json m;
  m["experiment"] = stem;
  m["preset"] = cfg.preset;
  m["seed"] = cfg.seed;
  m["trials"] = cfg.trials;
  m["version"] = version();
  m["workers"] = cfg.workers;
  m["rows"] = r.rows.rows.size();
  m["failed_rows"] = r.failed_rows;
  m["invariant_failures"] = r.invariant_failures;
  m["files"] = std::vector<std::string>(files.begin(), files.end() - 1);
  auto& c = m["config"];
  c["weight_step"] = cfg.weight_step;
  c["zero_axis"] = cfg.zero_axis;
  c["throughput_baseline"] = cfg.throughput_baseline;
  c["antennas"] = cfg.antennas;
  c["sinr_req_db"] = cfg.sinr_req_db;
  c["single_user_detection"] = cfg.single_user_detection;
  if (cfg.experiment == Experiment::SolverSelftest) c["selftest_gap_tol"] = cfg.selftest_gap_tol;
  if (cfg.preset == "table-2.1") {
    const auto& p = cfg.sep;
    c["p_max_w"] = p.p_max;
    c["noise_power_w"] = p.noise_power;
    c["p_ant_w"] = p.p_ant;
    c["p_c_w"] = p.p_c;
    c["pa_efficiency"] = p.pa_efficiency;
    c["eta"] = p.eta;
    c["carrier_hz"] = p.prop.carrier_freq;
    c["d_ref_m"] = p.prop.d_ref;
    c["d_max_m"] = p.prop.d_max;
  } else {
    const auto& p = cfg.secure;
    c["n_rx"] = p.n_rx_antennas;
    c["n_desired"] = p.n_desired;
    c["n_roaming"] = p.n_roaming;
    c["sigma_ant2_w"] = p.sigma_ant2;
    c["sigma_s2_w"] = p.sigma_s2;
    c["r_max"] = cfg.r_max;
    c["p_req1_w"] = cfg.p_req1;
    c["p_req2_w"] = cfg.p_req2;
    c["eta"] = p.eta;
    c["carrier_hz"] = p.prop.carrier_freq;
    c["d_ref_m"] = p.prop.d_ref;
    c["d_max_m"] = p.prop.d_max;
  }
  write_file(dir / files[3], m.dump(2) + "\n");

  for (const auto& msg : r.messages) log << msg << "\n";
  log << stem << ": " << r.rows.rows.size() << " rows, " << r.failed_rows << " without optimum, "
      << r.invariant_failures << " invariant failures -> " << dir.string() << "\n";
  if (cfg.experiment == Experiment::SolverSelftest) log << r.summary.tsv();
  if (r.invariant_failures > 0) return 3;
  if (!r.rows.rows.empty() && r.failed_rows == static_cast<int>(r.rows.rows.size())) return 2;
  return 0;
}

}  // namespace swipt::harness
