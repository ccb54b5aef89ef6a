// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"

namespace swipt::moop {

namespace detail {

conic::Functional& LiftedSdp::add_theta(conic::Functional& f, double c) const {
  return theta_block >= 0 ? f.psd_entry(theta_block, 0, 0, c) : f.scalar(theta, c);
}

double LiftedSdp::theta_value(const conic::Solution& s) const {
  return theta_block >= 0 ? s.primal.psd.at(theta_block)(0, 0) : s.primal.scalars(theta);
}

LiftedSdp lifted_base(const ChannelSet& ch, const SystemParams& params, bool theta_in_block) {
  const int n = static_cast<int>(ch.h.size());
  LiftedSdp sdp;
  auto& p = sdp.problem;
  sdp.wi = p.add_psd(2 * n);
  sdp.we = p.add_psd(2 * n);
  if (theta_in_block) {
    sdp.theta_block = p.add_psd(2);
    p.constrain(conic::Functional().psd_entry(sdp.theta_block, 0, 1, 1.0), conic::Relation::Equal, 1.0);
  } else {
    sdp.theta = p.add_scalar();
  }
  const Mat tr = conic::embed_coefficient(CMat::Identity(n, n));
  conic::Functional c1;
  c1.psd(sdp.wi, tr).psd(sdp.we, tr);
  p.constrain(sdp.add_theta(c1, -params.p_max), conic::Relation::LessEqual, 0.0);
  conic::Functional c4;
  c4.psd(sdp.wi, tr / params.pa_efficiency).psd(sdp.we, tr / params.pa_efficiency);
  p.constrain(sdp.add_theta(c4, params.circuit_power()), conic::Relation::LessEqual, 1.0);
  return sdp;
}

void add_rate_constraint(LiftedSdp& sdp, const ChannelSet& ch, const SystemParams& params, double s) {
  const CMat hn = ch.h * ch.h.adjoint() / params.noise_power;
  conic::Functional f;
  f.psd(sdp.wi, conic::embed_coefficient(hn));
  sdp.problem.constrain(sdp.add_theta(f, -std::expm1(s * std::log(2.0))), conic::Relation::GreaterEqual, 0.0);
}

double grid_golden(const std::vector<double>& grid, double rel_tol, const std::function<double(double)>& f) {
  if (grid.empty()) throw std::invalid_argument("empty search grid");
  std::vector<double> vals;
  vals.reserve(grid.size());
  for (double s : grid) vals.push_back(f(s));
  size_t k = 0;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] < vals[k]) k = i;
  double best_s = grid[k], best_v = vals[k];
  if (!std::isfinite(best_v)) return best_s;
  double a = k > 0 ? grid[k - 1] : 0.5 * grid[0];
  double b = k + 1 < grid.size() ? grid[k + 1] : grid[k];
  if (!(b > a)) return best_s;
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  auto keep = [&](double s, double v) {
    if (v < best_v) {
      best_v = v;
      best_s = s;
    }
  };
  keep(c, fc);
  keep(d, fd);
  while (b - a > rel_tol * b) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
      keep(c, fc);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
      keep(d, fd);
    }
  }
  return best_s;
}

std::vector<double> rate_grid(const ChannelSet& ch, const SystemParams& params, int points, double backoff) {
  const double snr = params.p_max * ch.h.squaredNorm() / params.noise_power;
  std::vector<double> grid;
  const int n = std::max(points, 2);
  for (int i = 0; i < n; ++i) {
    const double frac = std::pow(10.0, -6.0 + 6.0 * i / (n - 1)) * (1.0 - backoff);
    grid.push_back(std::log2(1.0 + frac * snr));
  }
  return grid;
}

CMat block_complex(const conic::Solution& s, int block) { return conic::hermitian_unembed(s.primal.psd.at(block)); }

double sin_angle(const CVec& a, const CVec& b) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const CVec ub = b / nb;
  const CVec perp = a - ub * ub.dot(a);
  return perp.norm() / na;
}

void finish_lifted(MoopAllocation& a, const LiftedVars& lv, const ChannelSet& ch, const SystemParams& params) {
  if (!(lv.theta > 1e-12)) throw std::runtime_error("lifted solution with vanishing theta");
  // Folding W_E into W_I keeps every constraint and cannot lower IR-EE.
  const CMat info = lv.w_i + lv.w_e;
  a.raw_we_norm = lv.w_e.norm();
  a.lifted = {info, CMat::Zero(info.rows(), info.cols()), lv.theta};
  a.theta = lv.theta;
  const RankOne r = rank_one_extract(info);
  a.rank_ratio = r.ratio;
  a.w_i = r.v / std::sqrt(lv.theta);
  a.w_e = CMat::Zero(info.rows(), info.cols());
  a.objectives = metrics::moop_objectives(a.w_i, a.w_e, ch, params);
  a.budget_residual = budget_identity(lv, params) - 1.0;
}

}  // namespace detail

LiftedVars lift(const CVec& w_i, const CMat& w_e, const SystemParams& params) {
  const double ptot = metrics::total_power(w_i, w_e, params);
  if (!(ptot > 0.0)) throw std::invalid_argument("total power must be positive");
  LiftedVars lv;
  lv.theta = 1.0 / ptot;
  lv.w_i = lv.theta * w_i * w_i.adjoint();
  lv.w_e = lv.theta * w_e;
  return lv;
}

std::pair<CVec, CMat> recover(const LiftedVars& lifted) {
  if (!(lifted.theta > 0.0)) throw std::invalid_argument("recover requires theta > 0");
  const RankOne r = rank_one_extract(lifted.w_i);
  return {r.v / std::sqrt(lifted.theta), lifted.w_e / lifted.theta};
}

double budget_identity(const LiftedVars& lifted, const SystemParams& params) {
  return (lifted.w_i.trace().real() + lifted.w_e.trace().real()) / params.pa_efficiency +
         lifted.theta * params.circuit_power();
}

double normalize(double f, double f_star, double f_zero) {
  if (!(f_star > f_zero)) throw std::invalid_argument("normalize requires f_star > f_zero");
  return (f - f_zero) / (f_star - f_zero);
}

}  // namespace swipt::moop
