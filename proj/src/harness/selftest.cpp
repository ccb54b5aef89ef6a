// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <random>

#include "detail.hpp"
#include "swipt/conic.hpp"
#include "swipt/moop.hpp"
#include "swipt/secure.hpp"

namespace swipt::harness::detail {

namespace {

using conic::Functional;
using conic::Relation;
using conic::Status;

struct Recorder {
  Table rows{{"group", "check", "value", "threshold", "pass"}, {}};
  std::map<std::string, std::pair<int, int>> tally;  // passed, total
  std::vector<std::string> groups;
  double max_rank = 0.0;

  void add(const std::string& group, const std::string& check, double value, double threshold) {
    const bool pass = std::isfinite(value) && value <= threshold;
    rows.rows.push_back({group, check, fmt(value), fmt(threshold), pass ? "1" : "0"});
    if (!tally.count(group)) groups.push_back(group);
    auto& t = tally[group];
    t.first += pass;
    ++t.second;
  }
  void status(const std::string& group, const std::string& check, bool ok) { add(group, check, ok ? 0.0 : 1.0, 0.0); }
  void rank(const std::string& group, const std::string& check, double ratio) {
    max_rank = std::max(max_rank, ratio);
    add(group, check, ratio, 1e-6);
  }
};

void check_solution(Recorder& rec, const std::string& name, const conic::Solution& s, double oracle) {
  rec.status("battery", name + ".status", s.status == Status::Optimal);
  rec.add("battery", name + ".objective", std::abs(s.primal_objective - oracle) / (1.0 + std::abs(oracle)), 1e-6);
  rec.add("battery", name + ".gap", s.gap, 1e-7);
}

void battery(Recorder& rec, const conic::Options& opts, std::uint64_t seed) {
  {
    conic::Problem p;
    const int x = p.add_scalar();
    p.constrain(Functional().scalar(x, 1.0), Relation::GreaterEqual, 3.0);
    p.minimize(Functional().scalar(x, 1.0));
    const auto s = conic::solve(p, opts);
    check_solution(rec, "lp", s, 3.0);
    rec.add("battery", "lp.dual", s.duals.size() == 1 ? std::abs(s.duals(0) - 1.0) : 1.0, 1e-6);
  }
  {
    conic::Problem p;
    const int b = p.add_psd(2);
    p.constrain(Functional().psd(b, Mat::Identity(2, 2)), Relation::Equal, 1.0);
    p.minimize(Functional().psd(b, Vec::LinSpaced(2, 1.0, 2.0).asDiagonal().toDenseMatrix()));
    check_solution(rec, "trace", conic::solve(p, opts), 1.0);
  }
  {
    conic::Problem p;
    const int b = p.add_psd(2);
    p.constrain(Functional().psd_entry(b, 0, 1, 1.0), Relation::Equal, 1.0);
    p.constrain(Functional().psd_entry(b, 1, 1, 1.0), Relation::Equal, 0.5);
    p.minimize(Functional().psd_entry(b, 0, 0, 1.0));
    check_solution(rec, "hyperbolic", conic::solve(p, opts), 2.0);
  }
  // min <C,X> s.t. <A,X> = r with A > 0 has value r * lambda_min(C, A).
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.5, 3.0);
  for (int i = 0; i < 10; ++i) {
    const int n = 2 + i % 4;
    Mat c(n, n), f(n, n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c(j, k) = nd(rng);
        f(j, k) = nd(rng);
      }
    c = 0.5 * (c + c.transpose()).eval();
    const Mat a = f * f.transpose() + Mat::Identity(n, n);
    const double r = ud(rng);
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(c, a);
    conic::Problem p;
    const int b = p.add_psd(n);
    p.constrain(Functional().psd(b, a), Relation::Equal, r);
    p.minimize(Functional().psd(b, c));
    check_solution(rec, "pencil" + std::to_string(i), conic::solve(p, opts), r * es.eigenvalues()(0));
  }
  {
    conic::Problem p;
    const int x = p.add_scalar();
    p.constrain(Functional().scalar(x, 1.0), Relation::GreaterEqual, 1.0);
    p.constrain(Functional().scalar(x, 1.0), Relation::LessEqual, 0.0);
    p.minimize(Functional().scalar(x, 1.0));
    rec.status("battery", "infeasible.certificate", conic::solve(p, opts).status == Status::Infeasible);
  }
  {
    conic::Problem p;
    const int x = p.add_scalar();
    p.constrain(Functional().scalar(x, 1.0), Relation::GreaterEqual, 1.0);
    p.minimize(Functional().scalar(x, -1.0));
    rec.status("battery", "unbounded.certificate", conic::solve(p, opts).status == Status::Unbounded);
  }
}

void sep_checks(Recorder& rec, const Config& cfg, const conic::Options& opts, int count) {
  moop::SearchOptions so;
  so.solver = opts;
  const SystemParams p = cfg.sep;
  for (int t = 0; t < count; ++t) {
    const std::string tag = "trial" + std::to_string(t);
    try {
      const ChannelSet ch = generate_sep_channels(p, cfg.seed, static_cast<std::uint64_t>(t));
      const auto closed = moop::solve_ehee_max(ch, p);
      const auto sdp = moop::solve_ehee_max_sdp(ch, p, so);
      rec.status("closed-form", tag + ".status", sdp.status == Status::Optimal);
      rec.add("closed-form", tag + ".ehee",
              std::abs(sdp.objectives.eh_ee - closed.objectives.eh_ee) / closed.objectives.eh_ee, 1e-4);
      const moop::Anchors an = moop::compute_anchors(ch, p, so);
      for (const moop::WeightVector& w : {moop::WeightVector{0.5, 0.5, 0.0}, moop::WeightVector{0.2, 0.3, 0.5}}) {
        const auto a = moop::solve_weighted_minmax(w, ch, p, an, so);
        const std::string name = tag + ".w(" + fmt(w.w1) + "," + fmt(w.w2) + "," + fmt(w.w3) + ")";
        rec.status("rank-sep", name + ".status", a.status == Status::Optimal);
        rec.rank("rank-sep", name + ".ratio", a.rank_ratio);
      }
    } catch (const std::exception&) {
      rec.status("rank-sep", tag + ".exception", false);
    }
  }
}

void secure_checks(Recorder& rec, const Config& cfg, const conic::Options& opts, int count) {
  secure::SecureOptions so;
  so.solver.gap_tol = opts.gap_tol;
  for (int t = 0; t < count; ++t) {
    const std::string tag = "trial" + std::to_string(t);
    try {
      const SecureParams p = secure_params(cfg, cfg.secure.n_tx_antennas, 10.0);
      const ChannelSet ch = generate_secure_channels(p, cfg.seed, static_cast<std::uint64_t>(t));
      const auto a = secure::solve_secure(ch, p, so);
      rec.status("rank-secure", tag + ".status", a.status == Status::Optimal);
      const auto rep = secure::verify_secure(a, ch, p);
      rec.status("rank-secure", tag + ".verified", rep.ok());
      rec.rank("rank-secure", tag + ".ratio", rep.max_rank_ratio);
    } catch (const std::exception&) {
      rec.status("rank-secure", tag + ".exception", false);
    }
  }
}

}  // namespace

RunResult selftest(const Config& cfg) {
  Recorder rec;
  conic::Options opts;
  opts.gap_tol = cfg.selftest_gap_tol;
  opts.feas_tol = std::max(opts.feas_tol, cfg.selftest_gap_tol);
  battery(rec, opts, cfg.seed);
  sep_checks(rec, cfg, opts, cfg.trials / 2);
  secure_checks(rec, cfg, opts, cfg.trials - cfg.trials / 2);

  RunResult r;
  r.rows = rec.rows;
  r.aggregate.columns = {"group", "checks", "passed", "failed"};
  r.summary.columns = {"group", "result", "passed", "checks"};
  for (const auto& g : rec.groups) {
    const auto [pass, total] = rec.tally[g];
    r.aggregate.rows.push_back({g, std::to_string(total), std::to_string(pass), std::to_string(total - pass)});
    r.summary.rows.push_back({g, pass == total ? "PASS" : "FAIL", std::to_string(pass), std::to_string(total)});
    r.invariant_failures += total - pass;
  }
  r.summary.rows.push_back({"max_rank_ratio", rec.max_rank <= 1e-6 ? "PASS" : "FAIL", fmt(rec.max_rank), fmt(1e-6)});
  for (const auto& row : rec.rows.rows)
    if (row[4] == "0") r.messages.push_back("selftest failed: " + row[0] + " " + row[1] + " = " + row[2]);
  return r;
}

}  // namespace swipt::harness::detail
