// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "detail.hpp"

namespace swipt::moop {

void WeightVector::validate() const {
  for (double w : {w1, w2, w3})
    if (!(w >= 0.0 && w <= 1.0)) throw std::invalid_argument("weights must lie in [0,1]");
  if (std::abs(w1 + w2 + w3 - 1.0) > 1e-12) throw std::invalid_argument("weights must sum to one");
}

namespace {

struct MinmaxSolve {
  detail::LiftedSdp sdp;
  conic::Solution sol;
};

MinmaxSolve solve_at(std::optional<double> s, const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                     const Anchors& an, const conic::Options& opts) {
  MinmaxSolve out{detail::lifted_base(ch, params, w.w3 > 0.0), {}};
  auto& sdp = out.sdp;
  auto& p = sdp.problem;
  sdp.tau = p.add_scalar();
  if (w.w1 > 0.0) {
    if (!s) throw std::logic_error("rate parameter required when w1 > 0");
    detail::add_rate_constraint(sdp, ch, params, *s);
    conic::Functional f;
    f.scalar(sdp.tau, 1.0 / w.w1);
    p.constrain(sdp.add_theta(f, *s / an.phi_ir_star), conic::Relation::GreaterEqual, 1.0);
  }
  if (w.w2 > 0.0) {
    const Mat gq = conic::embed_coefficient(params.eta * ch.g * ch.g.adjoint() / an.phi_eh_star);
    p.constrain(conic::Functional().psd(sdp.wi, gq).psd(sdp.we, gq).scalar(sdp.tau, 1.0 / w.w2),
                conic::Relation::GreaterEqual, 1.0);
  }
  if (w.w3 > 0.0) {
    // [[theta, 1], [1, a tau + c0]] psd  <=>  1/theta - c0 <= a tau
    const double a = an.p_max / (w.w3 * params.pa_efficiency);
    p.constrain(conic::Functional().psd_entry(sdp.theta_block, 1, 1, 1.0).scalar(sdp.tau, -a),
                conic::Relation::Equal, params.circuit_power());
  }
  p.minimize(conic::Functional().scalar(sdp.tau, 1.0));
  out.sol = conic::solve(p, opts);
  return out;
}

}  // namespace

double minmax_value_at(double s, const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                       const Anchors& anchors, const conic::Options& opts) {
  const MinmaxSolve r = solve_at(s, w, ch, params, anchors, opts);
  if (r.sol.status != conic::Status::Optimal) return std::numeric_limits<double>::infinity();
  return r.sol.primal.scalars(r.sdp.tau);
}

MoopAllocation solve_weighted_minmax(const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                                     const Anchors& anchors, const SearchOptions& opts) {
  w.validate();
  if (w.w1 == 0.0 && w.w2 == 0.0) {
    MoopAllocation a = solve_power_min(params);
    a.weights = w;
    return a;
  }
  if (w.w1 == 1.0) {
    MoopAllocation a = solve_iree_max(ch, params, opts);
    a.tau = std::max(0.0, 1.0 - a.rate_param * a.theta / anchors.phi_ir_star);
    return a;
  }
  MoopAllocation best;
  best.weights = w;
  best.status = conic::Status::NumericalLimit;
  double best_tau = std::numeric_limits<double>::infinity();
  int solves = 0;
  auto eval = [&](std::optional<double> s) {
    const MinmaxSolve r = solve_at(s, w, ch, params, anchors, opts.solver);
    ++solves;
    if (r.sol.status != conic::Status::Optimal) return std::numeric_limits<double>::infinity();
    const double tau = r.sol.primal.scalars(r.sdp.tau);
    if (tau < best_tau) {
      best_tau = tau;
      best.status = r.sol.status;
      best.tau = tau;
      best.rate_param = s.value_or(0.0);
      LiftedVars lv{detail::block_complex(r.sol, r.sdp.wi), detail::block_complex(r.sol, r.sdp.we),
                    r.sdp.theta_value(r.sol)};
      detail::finish_lifted(best, lv, ch, params);
    }
    return tau;
  };
  if (w.w1 == 0.0) {
    eval(std::nullopt);
  } else {
    detail::grid_golden(detail::rate_grid(ch, params, opts.grid_points), opts.rel_tol,
                        [&](double s) { return eval(s); });
  }
  best.sdp_solves = solves;
  return best;
}

}  // namespace swipt::moop
