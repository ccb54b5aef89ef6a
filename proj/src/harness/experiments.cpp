// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <map>

#include "detail.hpp"
#include "swipt/moop.hpp"
#include "swipt/secure.hpp"

namespace swipt::harness {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string status_name(conic::Status s) { return conic::to_string(s); }

struct Columns {
  std::vector<std::string> keys;
  std::vector<std::string> metrics;
};

const Columns kMoopColumns{{"n_tx", "scheme", "w1", "w2", "w3"},
                           {"ir_ee", "eh_ee", "p_tx", "rate", "harvested", "p_total", "tau", "rank_ratio",
                            "raw_we_norm", "sdp_solves"}};
const Columns kSecureColumns{{"n_tx", "gamma_db", "scheme"},
                             {"p_tx", "signal_power", "an_power", "min_secrecy_rate", "total_harvested",
                              "max_rank_ratio", "fallback", "verified", "sdp_solves"}};

Table empty_rows(const Columns& c) {
  Table t;
  t.columns = {"trial"};
  t.columns.insert(t.columns.end(), c.keys.begin(), c.keys.end());
  t.columns.push_back("status");
  t.columns.insert(t.columns.end(), c.metrics.begin(), c.metrics.end());
  return t;
}

struct TrialRows {
  std::vector<std::vector<std::string>> rows;
  int invariant_failures = 0;
  std::vector<std::string> messages;
};

std::vector<std::string> row_of(int trial, const std::vector<std::string>& keys, const std::string& status,
                                const std::vector<double>& metrics) {
  std::vector<std::string> r{std::to_string(trial)};
  r.insert(r.end(), keys.begin(), keys.end());
  r.push_back(status);
  for (double v : metrics) r.push_back(fmt(v));
  return r;
}

std::vector<double> moop_metrics(const moop::MoopAllocation& a) {
  const auto& o = a.objectives;
  return {o.ir_ee,  o.eh_ee,        o.p_tx,          o.rate, o.harvested, o.p_total, a.tau, a.rank_ratio,
          a.raw_we_norm, static_cast<double>(a.sdp_solves)};
}

TrialRows moop_trial(const Config& cfg, int trial) {
  TrialRows out;
  const int nt_max = *std::max_element(cfg.antennas.begin(), cfg.antennas.end());
  SystemParams base = cfg.sep;
  base.n_tx_antennas = nt_max;
  const ChannelSet full = generate_sep_channels(base, cfg.seed, static_cast<std::uint64_t>(trial));
  const std::vector<moop::WeightVector> weights = cfg.experiment == Experiment::MoopRegion
                                                      ? moop::sweep_weights(cfg.weight_step)
                                                      : moop::pairwise_weights(cfg.weight_step, cfg.zero_axis);
  const std::vector<double> nan_metrics(kMoopColumns.metrics.size(), kNaN);
  for (int nt : cfg.antennas) {
    SystemParams p = cfg.sep;
    p.n_tx_antennas = nt;
    const ChannelSet ch = full.truncated(nt);
    moop::Anchors an;
    bool anchors_ok = true;
    try {
      an = moop::compute_anchors(ch, p);
    } catch (const std::exception& e) {
      anchors_ok = false;
      out.messages.push_back("trial " + std::to_string(trial) + ": " + e.what());
    }
    for (const auto& w : weights) {
      const std::vector<std::string> wk{fmt(w.w1), fmt(w.w2), fmt(w.w3)};
      auto keys = [&](const char* scheme) {
        std::vector<std::string> k{std::to_string(nt), scheme};
        k.insert(k.end(), wk.begin(), wk.end());
        return k;
      };
      if (!anchors_ok) {
        out.rows.push_back(row_of(trial, keys("optimal"), "anchor-failed", nan_metrics));
      } else {
        try {
          const moop::MoopAllocation a = moop::solve_weighted_minmax(w, ch, p, an);
          const bool ok = a.status == conic::Status::Optimal;
          const std::vector<double> m = ok ? moop_metrics(a) : nan_metrics;
          out.rows.push_back(row_of(trial, keys("optimal"), status_name(a.status), m));
          if (ok) {
            const bool finite = std::all_of(m.begin(), m.end(), [](double v) { return std::isfinite(v); });
            const bool nonzero = a.objectives.p_tx > 0.0;
            if (!finite || a.rank_ratio > 1e-6 || (nonzero && std::abs(a.budget_residual) > 1e-6)) {
              ++out.invariant_failures;
              out.messages.push_back("trial " + std::to_string(trial) + " weights (" + wk[0] + "," + wk[1] + "," +
                                     wk[2] + "): rank or budget invariant violated");
            }
          }
        } catch (const std::exception& e) {
          out.rows.push_back(row_of(trial, keys("optimal"), "error", nan_metrics));
          out.messages.push_back("trial " + std::to_string(trial) + ": " + e.what());
        }
      }
      if (cfg.throughput_baseline) {
        try {
          const moop::MoopAllocation b = moop::solve_throughput_minmax(w, ch, p);
          const bool ok = b.status == conic::Status::Optimal;
          out.rows.push_back(row_of(trial, keys("throughput-baseline"), status_name(b.status),
                                    ok ? moop_metrics(b) : nan_metrics));
        } catch (const std::exception& e) {
          out.rows.push_back(row_of(trial, keys("throughput-baseline"), "error", nan_metrics));
          out.messages.push_back("trial " + std::to_string(trial) + ": " + e.what());
        }
      }
    }
  }
  return out;
}

TrialRows secure_trial(const Config& cfg, int trial) {
  TrialRows out;
  const int nt_max = *std::max_element(cfg.antennas.begin(), cfg.antennas.end());
  const SecureParams base = secure_params(cfg, nt_max, cfg.sinr_req_db.front());
  const ChannelSet full = generate_secure_channels(base, cfg.seed, static_cast<std::uint64_t>(trial));
  secure::SecureOptions opts;
  opts.single_user_detection = cfg.single_user_detection;
  const std::vector<double> nan_metrics(kSecureColumns.metrics.size(), kNaN);
  for (int nt : cfg.antennas) {
    const ChannelSet ch = full.truncated(nt);
    for (double g : cfg.sinr_req_db) {
      const SecureParams p = secure_params(cfg, nt, g);
      for (auto scheme : {secure::Scheme::Optimal, secure::Scheme::ZeroForcing, secure::Scheme::ZeroForcingHalfSplit}) {
        const std::vector<std::string> keys{std::to_string(nt), fmt(g), secure::to_string(scheme)};
        try {
          const secure::SecureAllocation a = secure::run_scheme(ch, p, scheme, opts);
          if (a.status != conic::Status::Optimal) {
            out.rows.push_back(row_of(trial, keys, status_name(a.status), nan_metrics));
            continue;
          }
          const secure::SecureReport rep = secure::verify_secure(a, ch, p, cfg.single_user_detection, opts.verify_tol);
          double harvested = 0.0;
          for (double e : a.qos.harvested_desired) harvested += e;
          for (double e : a.qos.harvested_roaming) harvested += e;
          const double min_secrecy = *std::min_element(a.qos.secrecy_rate.begin(), a.qos.secrecy_rate.end());
          const std::vector<double> m{a.p_tx,
                                      a.signal_power,
                                      a.an_power,
                                      min_secrecy,
                                      harvested,
                                      rep.max_rank_ratio,
                                      a.fallback ? 1.0 : 0.0,
                                      rep.ok() ? 1.0 : 0.0,
                                      static_cast<double>(a.sdp_solves)};
          out.rows.push_back(row_of(trial, keys, status_name(a.status), m));
          const bool finite = std::all_of(m.begin(), m.end(), [](double v) { return std::isfinite(v); });
          if (!finite || !rep.ok() || (scheme == secure::Scheme::Optimal && rep.max_rank_ratio > 1e-6)) {
            ++out.invariant_failures;
            std::string what = "trial " + std::to_string(trial) + " n_tx " + keys[0] + " gamma " + keys[1] + " " +
                               keys[2] + ": verification failed";
            for (const auto& v : rep.violations) what += " " + v.constraint + "[" + std::to_string(v.index) + "]";
            out.messages.push_back(what);
          }
        } catch (const std::exception& e) {
          out.rows.push_back(row_of(trial, keys, "error", nan_metrics));
          out.messages.push_back("trial " + std::to_string(trial) + ": " + e.what());
        }
      }
    }
  }
  return out;
}

// Mean of each metric over the optimal rows of every key group, in first-appearance order.
Table aggregate(const Table& rows, const Columns& c) {
  Table t;
  t.columns = c.keys;
  t.columns.push_back("n_rows");
  t.columns.push_back("n_ok");
  for (const auto& m : c.metrics) t.columns.push_back("mean_" + m);
  const size_t nk = c.keys.size(), status_col = 1 + nk, first_metric = status_col + 1;
  std::map<std::vector<std::string>, size_t> index;
  std::vector<std::vector<std::string>> order;
  std::vector<std::vector<double>> sums;
  std::vector<int> n_rows, n_ok;
  for (const auto& r : rows.rows) {
    const std::vector<std::string> key(r.begin() + 1, r.begin() + 1 + static_cast<long>(nk));
    auto [it, fresh] = index.emplace(key, order.size());
    if (fresh) {
      order.push_back(key);
      sums.emplace_back(c.metrics.size(), 0.0);
      n_rows.push_back(0);
      n_ok.push_back(0);
    }
    const size_t g = it->second;
    ++n_rows[g];
    if (r[status_col] != "optimal") continue;
    ++n_ok[g];
    for (size_t m = 0; m < c.metrics.size(); ++m) sums[g][m] += std::stod(r[first_metric + m]);
  }
  for (size_t g = 0; g < order.size(); ++g) {
    std::vector<std::string> out = order[g];
    out.push_back(std::to_string(n_rows[g]));
    out.push_back(std::to_string(n_ok[g]));
    for (double s : sums[g]) out.push_back(n_ok[g] > 0 ? fmt(s / n_ok[g]) : fmt(kNaN));
    t.rows.push_back(std::move(out));
  }
  return t;
}

double col(const Table& t, const std::vector<std::string>& row, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  return std::stod(row[static_cast<size_t>(it - t.columns.begin())]);
}

std::string cell(const Table& t, const std::vector<std::string>& row, const std::string& name) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), name);
  return row[static_cast<size_t>(it - t.columns.begin())];
}

// Mean objective triples per weight vector, with a flag for the ones that survive Pareto filtering
// within their (n_tx, scheme) group.
Table moop_summary(const Table& agg) {
  Table t;
  t.columns = {"n_tx", "scheme", "w1", "w2", "w3", "n_ok", "ir_ee", "eh_ee", "p_tx", "rate", "harvested", "pareto"};
  std::map<std::pair<std::string, std::string>, std::vector<size_t>> groups;
  std::vector<std::pair<std::string, std::string>> order;
  for (size_t i = 0; i < agg.rows.size(); ++i) {
    const auto key = std::make_pair(cell(agg, agg.rows[i], "n_tx"), cell(agg, agg.rows[i], "scheme"));
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(i);
  }
  std::vector<bool> pareto(agg.rows.size(), false);
  for (const auto& key : order) {
    std::vector<std::vector<double>> pts;
    std::vector<size_t> idx;
    for (size_t i : groups[key]) {
      const auto& r = agg.rows[i];
      const std::vector<double> p{col(agg, r, "mean_ir_ee"), col(agg, r, "mean_eh_ee"), col(agg, r, "mean_p_tx")};
      if (std::all_of(p.begin(), p.end(), [](double v) { return std::isfinite(v); })) {
        pts.push_back(p);
        idx.push_back(i);
      }
    }
    for (size_t k : moop::pareto_filter(pts, {moop::Sense::Maximize, moop::Sense::Maximize, moop::Sense::Minimize}))
      pareto[idx[k]] = true;
  }
  for (size_t i = 0; i < agg.rows.size(); ++i) {
    const auto& r = agg.rows[i];
    t.rows.push_back({cell(agg, r, "n_tx"), cell(agg, r, "scheme"), cell(agg, r, "w1"), cell(agg, r, "w2"),
                      cell(agg, r, "w3"), cell(agg, r, "n_ok"), cell(agg, r, "mean_ir_ee"), cell(agg, r, "mean_eh_ee"),
                      cell(agg, r, "mean_p_tx"), cell(agg, r, "mean_rate"), cell(agg, r, "mean_harvested"),
                      pareto[i] ? "1" : "0"});
  }
  return t;
}

// Mean transmit power per scheme and the gap of each baseline to the optimal scheme.
Table secure_summary(const Table& agg) {
  Table t;
  t.columns = {"n_tx", "gamma_db", "scheme", "n_ok", "mean_p_tx_dbm", "an_share", "gap_to_optimal_db",
               "mean_min_secrecy_rate"};
  std::map<std::pair<std::string, std::string>, double> optimal;
  for (const auto& r : agg.rows)
    if (cell(agg, r, "scheme") == "optimal")
      optimal[{cell(agg, r, "n_tx"), cell(agg, r, "gamma_db")}] = col(agg, r, "mean_p_tx");
  for (const auto& r : agg.rows) {
    const double p = col(agg, r, "mean_p_tx");
    const double opt = optimal.at({cell(agg, r, "n_tx"), cell(agg, r, "gamma_db")});
    t.rows.push_back({cell(agg, r, "n_tx"), cell(agg, r, "gamma_db"), cell(agg, r, "scheme"), cell(agg, r, "n_ok"),
                      fmt(10.0 * std::log10(p) + 30.0), fmt(col(agg, r, "mean_an_power") / p),
                      fmt(10.0 * std::log10(p / opt)), cell(agg, r, "mean_min_secrecy_rate")});
  }
  return t;
}

RunResult sweep(const Config& cfg, const Columns& c, TrialRows (*trial_fn)(const Config&, int)) {
  std::vector<TrialRows> per_trial(static_cast<size_t>(cfg.trials));
  parallel_for(cfg.trials, cfg.workers, [&](int t) { per_trial[static_cast<size_t>(t)] = trial_fn(cfg, t); });
  RunResult r;
  r.rows = empty_rows(c);
  for (auto& tr : per_trial) {
    for (auto& row : tr.rows) r.rows.rows.push_back(std::move(row));
    r.invariant_failures += tr.invariant_failures;
    for (auto& m : tr.messages) r.messages.push_back(std::move(m));
  }
  const size_t status_col = 1 + c.keys.size();
  for (const auto& row : r.rows.rows)
    if (row[status_col] != "optimal") ++r.failed_rows;
  r.aggregate = aggregate(r.rows, c);
  return r;
}

}  // namespace

RunResult execute(const Config& cfg) {
  cfg.validate();
  switch (cfg.experiment) {
    case Experiment::MoopRegion:
    case Experiment::MoopPairwise: {
      RunResult r = sweep(cfg, kMoopColumns, moop_trial);
      r.summary = moop_summary(r.aggregate);
      return r;
    }
    case Experiment::SecureSweep: {
      RunResult r = sweep(cfg, kSecureColumns, secure_trial);
      r.summary = secure_summary(r.aggregate);
      return r;
    }
    case Experiment::SolverSelftest:
      return detail::selftest(cfg);
  }
  return {};
}

}  // namespace swipt::harness
