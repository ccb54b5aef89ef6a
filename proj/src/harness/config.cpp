// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "swipt/harness.hpp"

namespace swipt::harness {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || trim(v.substr(used)) != "") throw std::invalid_argument(key + ": not a number: '" + v + "'");
  return x;
}

long long to_int(const std::string& key, const std::string& v) {
  const double x = to_double(key, v);
  if (x != std::floor(x) || std::abs(x) > 9e15) throw std::invalid_argument(key + ": not an integer: '" + v + "'");
  return static_cast<long long>(x);
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument(key + ": not a boolean: '" + v + "'");
}

template <class T, class F>
std::vector<T> to_list(const std::string& v, F parse) {
  std::vector<T> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse(item));
  }
  return out;
}

void apply_preset(Config& cfg, const std::string& name) {
  if (name == "table-2.1") {
    cfg.sep = table_2_1(cfg.sep.n_tx_antennas);
  } else if (name == "table-3.1") {
    const SecureParams t = table_3_1();
    cfg.secure = t;
    cfg.r_max = t.r_max(0, 0);
    cfg.p_req1 = t.p_req1.front();
    cfg.p_req2 = t.p_req2.front();
  } else {
    throw std::invalid_argument("unknown preset '" + name + "' (expected table-2.1 or table-3.1)");
  }
  cfg.preset = name;
}

}  // namespace

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::MoopRegion: return "moop-region";
    case Experiment::MoopPairwise: return "moop-pairwise";
    case Experiment::SecureSweep: return "secure-sweep";
    case Experiment::SolverSelftest: return "solver-selftest";
  }
  return "unknown";
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::MoopRegion, Experiment::MoopPairwise, Experiment::SecureSweep,
                       Experiment::SolverSelftest})
    if (name == to_string(e)) return e;
  throw std::invalid_argument("unknown experiment '" + name + "'");
}

Config defaults(Experiment e) {
  Config cfg;
  cfg.experiment = e;
  apply_preset(cfg, "table-3.1");
  apply_preset(cfg, "table-2.1");
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  cfg.antennas = {8};
  switch (e) {
    case Experiment::MoopRegion:
      cfg.weight_step = 0.04;
      break;
    case Experiment::MoopPairwise:
      cfg.weight_step = 0.01;
      cfg.throughput_baseline = true;
      break;
    case Experiment::SecureSweep:
      cfg.preset = "table-3.1";
      cfg.antennas = {5, 8};
      for (int g = 10; g <= 20; g += 2) cfg.sinr_req_db.push_back(g);
      break;
    case Experiment::SolverSelftest:
      cfg.trials = 20;
      break;
  }
  return cfg;
}

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  auto num = [&] { return to_double(key, v); };
  auto dbm = [&] { return dbm_to_watt(num()); };
  auto count = [&] { return static_cast<int>(to_int(key, v)); };
  auto& sp = cfg.secure;
  if (key == "preset") {
    apply_preset(cfg, v);
  } else if (key == "seed") {
    const long long s = to_int(key, v);
    if (s < 0) throw std::invalid_argument("seed must be nonnegative");
    cfg.seed = static_cast<std::uint64_t>(s);
  } else if (key == "trials") {
    cfg.trials = count();
  } else if (key == "weight_step") {
    cfg.weight_step = num();
  } else if (key == "zero_axis") {
    cfg.zero_axis = count();
  } else if (key == "throughput_baseline") {
    cfg.throughput_baseline = to_bool(key, v);
  } else if (key == "antennas") {
    cfg.antennas = to_list<int>(v, [&](const std::string& s) { return static_cast<int>(to_int(key, s)); });
  } else if (key == "sinr_req_db") {
    cfg.sinr_req_db = to_list<double>(v, [&](const std::string& s) { return to_double(key, s); });
  } else if (key == "single_user_detection") {
    cfg.single_user_detection = to_bool(key, v);
  } else if (key == "workers") {
    cfg.workers = count();
  } else if (key == "out_dir") {
    cfg.out_dir = v;
  } else if (key == "selftest_gap_tol") {
    cfg.selftest_gap_tol = num();
  } else if (key == "carrier_mhz") {
    cfg.sep.prop.carrier_freq = sp.prop.carrier_freq = num() * 1e6;
  } else if (key == "antenna_gain_dbi") {
    cfg.sep.prop.antenna_gain_dbi = sp.prop.antenna_gain_dbi = num();
  } else if (key == "rician_db") {
    cfg.sep.prop.rician_factor_db = sp.prop.rician_factor_db = num();
  } else if (key == "breakpoint_m") {
    cfg.sep.prop.breakpoint = sp.prop.breakpoint = num();
  } else if (key == "d_ref_m") {
    (cfg.preset == "table-3.1" ? sp.prop : cfg.sep.prop).d_ref = num();
  } else if (key == "d_max_m") {
    (cfg.preset == "table-3.1" ? sp.prop : cfg.sep.prop).d_max = num();
  } else if (key == "eta") {
    (cfg.preset == "table-3.1" ? sp.eta : cfg.sep.eta) = num();
  } else if (key == "bandwidth_khz") {
    cfg.sep.bandwidth = num() * 1e3;
  } else if (key == "p_ant_mw") {
    cfg.sep.p_ant = num() * 1e-3;
  } else if (key == "p_c_w") {
    cfg.sep.p_c = num();
  } else if (key == "pa_efficiency") {
    cfg.sep.pa_efficiency = num();
  } else if (key == "p_max_dbm") {
    cfg.sep.p_max = dbm();
  } else if (key == "noise_dbm") {
    cfg.sep.noise_power = dbm();
  } else if (key == "n_rx") {
    sp.n_rx_antennas = count();
  } else if (key == "n_desired") {
    sp.n_desired = count();
  } else if (key == "n_roaming") {
    sp.n_roaming = count();
  } else if (key == "sigma_ant_dbm") {
    sp.sigma_ant2 = dbm();
  } else if (key == "sigma_s_dbm") {
    sp.sigma_s2 = dbm();
  } else if (key == "r_max") {
    cfg.r_max = num();
  } else if (key == "p_req1_dbm") {
    cfg.p_req1 = dbm();
  } else if (key == "p_req2_dbm") {
    cfg.p_req2 = dbm();
  } else {
    throw std::invalid_argument("unknown key '" + key + "'");
  }
}

void apply_text(Config& cfg, const std::string& text, const std::string& origin) {
  std::stringstream ss(text);
  std::string line;
  int n = 0;
  while (std::getline(ss, line)) {
    ++n;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(origin + ":" + std::to_string(n) + ": expected key = value");
    try {
      apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(origin + ":" + std::to_string(n) + ": " + e.what());
    }
  }
}

Config load_config(Experiment e, const std::string& path) {
  Config cfg = defaults(e);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  apply_text(cfg, buf.str(), path);
  return cfg;
}

SecureParams secure_params(const Config& cfg, int n_tx, double gamma_req_db) {
  SecureParams p = cfg.secure;
  p.n_tx_antennas = n_tx;
  p.gamma_req.assign(p.n_desired, db_to_linear(gamma_req_db));
  p.r_max = Mat::Constant(p.n_roaming, p.n_desired, cfg.r_max);
  p.p_req1.assign(p.n_desired, cfg.p_req1);
  p.p_req2.assign(p.n_roaming, cfg.p_req2);
  return p;
}

void Config::validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (antennas.empty()) throw std::invalid_argument("antenna list is empty");
  for (int n : antennas)
    if (n < 1) throw std::invalid_argument("antenna counts must be positive");
  const double n = std::round(1.0 / weight_step);
  if (!(weight_step > 0.0 && weight_step <= 1.0) || std::abs(n * weight_step - 1.0) > 1e-9)
    throw std::invalid_argument("weight_step must divide 1");
  if (zero_axis < 1 || zero_axis > 3) throw std::invalid_argument("zero_axis must be 1, 2 or 3");
  if (!(selftest_gap_tol > 0.0)) throw std::invalid_argument("selftest_gap_tol must be positive");
  switch (experiment) {
    case Experiment::MoopRegion:
    case Experiment::MoopPairwise:
      if (preset != "table-2.1") throw std::invalid_argument("moop experiments use the table-2.1 preset");
      for (int a : antennas) {
        SystemParams p = sep;
        p.n_tx_antennas = a;
        p.validate();
      }
      break;
    case Experiment::SecureSweep:
      if (preset != "table-3.1") throw std::invalid_argument("secure-sweep uses the table-3.1 preset");
      if (sinr_req_db.empty()) throw std::invalid_argument("sinr_req_db list is empty");
      for (int a : antennas)
        for (double g : sinr_req_db) secure_params(*this, a, g).validate();
      break;
    case Experiment::SolverSelftest:
      break;
  }
}

}  // namespace swipt::harness
