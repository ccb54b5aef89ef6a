// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <stdexcept>

#include "detail.hpp"

namespace swipt::moop {

MoopAllocation solve_power_min(const SystemParams& params) {
  const int n = params.n_tx_antennas;
  MoopAllocation a;
  a.w_i = CVec::Zero(n);
  a.w_e = CMat::Zero(n, n);
  a.theta = 1.0 / params.circuit_power();
  a.weights = {0.0, 0.0, 1.0};
  a.lifted = {CMat::Zero(n, n), CMat::Zero(n, n), a.theta};
  a.objectives.p_total = params.circuit_power();
  return a;
}

MoopAllocation solve_ehee_max(const ChannelSet& ch, const SystemParams& params) {
  const double gn = ch.g.norm();
  if (!(gn > 0.0)) throw std::domain_error("degenerate harvester channel");
  MoopAllocation a;
  a.w_i = std::sqrt(params.p_max) * ch.g / gn;
  a.w_e = CMat::Zero(ch.g.size(), ch.g.size());
  a.objectives = metrics::moop_objectives(a.w_i, a.w_e, ch, params);
  a.theta = 1.0 / a.objectives.p_total;
  a.weights = {0.0, 1.0, 0.0};
  a.lifted = lift(a.w_i, a.w_e, params);
  return a;
}

MoopAllocation solve_ehee_max_sdp(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts) {
  const double g2 = ch.g.squaredNorm();
  if (!(g2 > 0.0)) throw std::domain_error("degenerate harvester channel");
  auto sdp = detail::lifted_base(ch, params);
  const Mat gn = conic::embed_coefficient(ch.g * ch.g.adjoint() / g2);
  sdp.problem.minimize(conic::Functional().psd(sdp.wi, -gn).psd(sdp.we, -gn));
  const conic::Solution s = conic::solve(sdp.problem, opts.solver);
  MoopAllocation a;
  a.weights = {0.0, 1.0, 0.0};
  a.status = s.status;
  a.sdp_solves = 1;
  if (s.status != conic::Status::Optimal) return a;
  LiftedVars lv{detail::block_complex(s, sdp.wi), detail::block_complex(s, sdp.we), sdp.theta_value(s)};
  detail::finish_lifted(a, lv, ch, params);
  return a;
}

MoopAllocation solve_iree_max(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts) {
  if (!(ch.h.norm() > 0.0)) throw std::domain_error("degenerate information channel");
  MoopAllocation best;
  best.weights = {1.0, 0.0, 0.0};
  best.status = conic::Status::NumericalLimit;
  double best_val = std::numeric_limits<double>::infinity();
  int solves = 0;
  auto eval = [&](double s) {
    auto sdp = detail::lifted_base(ch, params);
    detail::add_rate_constraint(sdp, ch, params, s);
    sdp.problem.minimize(conic::Functional().scalar(sdp.theta, -1.0));
    const conic::Solution sol = conic::solve(sdp.problem, opts.solver);
    ++solves;
    if (sol.status != conic::Status::Optimal) return std::numeric_limits<double>::infinity();
    const double v = -s * sdp.theta_value(sol);
    if (v < best_val) {
      best_val = v;
      best.status = sol.status;
      best.rate_param = s;
      LiftedVars lv{detail::block_complex(sol, sdp.wi), detail::block_complex(sol, sdp.we), sdp.theta_value(sol)};
      detail::finish_lifted(best, lv, ch, params);
    }
    return v;
  };
  detail::grid_golden(detail::rate_grid(ch, params, opts.grid_points), opts.rel_tol, eval);
  best.sdp_solves = solves;
  return best;
}

Anchors compute_anchors(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts) {
  Anchors an;
  an.p_max = params.p_max;
  an.phi_eh_star = solve_ehee_max(ch, params).objectives.eh_ee;
  const MoopAllocation ir = solve_iree_max(ch, params, opts);
  if (ir.status != conic::Status::Optimal) throw std::runtime_error("IR-EE anchor solve failed");
  // The lifted value s * theta is what the weighted problem compares against.
  an.phi_ir_star = ir.rate_param * ir.theta;
  return an;
}

}  // namespace swipt::moop
