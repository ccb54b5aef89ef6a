// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <limits>
#include <optional>

#include "detail.hpp"

namespace swipt::moop {

ThroughputAnchors throughput_anchors(const ChannelSet& ch, const SystemParams& params) {
  ThroughputAnchors t;
  t.rate_star = std::log2(1.0 + params.p_max * ch.h.squaredNorm() / params.noise_power);
  t.harvest_star = params.eta * params.p_max * ch.g.squaredNorm();
  return t;
}

MoopAllocation solve_throughput_minmax(const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                                       const SearchOptions& opts) {
  w.validate();
  if (w.w1 == 0.0 && w.w2 == 0.0) {
    MoopAllocation a = solve_power_min(params);
    a.weights = w;
    return a;
  }
  const ThroughputAnchors an = throughput_anchors(ch, params);
  const int n = static_cast<int>(ch.h.size());
  const Mat tr = conic::embed_coefficient(CMat::Identity(n, n)) / params.p_max;

  MoopAllocation best;
  best.weights = w;
  best.status = conic::Status::NumericalLimit;
  double best_tau = std::numeric_limits<double>::infinity();
  int solves = 0;
  auto eval = [&](std::optional<double> r) {
    conic::Problem p;
    const int wi = p.add_psd(2 * n), we = p.add_psd(2 * n);
    const int tau = p.add_scalar();
    p.constrain(conic::Functional().psd(wi, tr).psd(we, tr), conic::Relation::LessEqual, 1.0);
    if (w.w1 > 0.0) {
      const CMat hn = ch.h * ch.h.adjoint() / params.noise_power;
      p.constrain(conic::Functional().psd(wi, conic::embed_coefficient(hn)), conic::Relation::GreaterEqual,
                  std::expm1(*r * std::log(2.0)));
      p.constrain(conic::Functional().scalar(tau, 1.0), conic::Relation::GreaterEqual,
                  w.w1 * (1.0 - *r / an.rate_star));
    }
    if (w.w2 > 0.0) {
      const Mat gq = conic::embed_coefficient(params.eta * ch.g * ch.g.adjoint() / an.harvest_star);
      p.constrain(conic::Functional().psd(wi, gq).psd(we, gq).scalar(tau, 1.0 / w.w2), conic::Relation::GreaterEqual,
                  1.0);
    }
    if (w.w3 > 0.0)
      p.constrain(conic::Functional().psd(wi, tr).psd(we, tr).scalar(tau, -1.0 / w.w3), conic::Relation::LessEqual,
                  0.0);
    p.minimize(conic::Functional().scalar(tau, 1.0));
    const conic::Solution sol = conic::solve(p, opts.solver);
    ++solves;
    if (sol.status != conic::Status::Optimal) return std::numeric_limits<double>::infinity();
    const double t = sol.primal.scalars(tau);
    if (t < best_tau) {
      best_tau = t;
      best.status = sol.status;
      best.tau = t;
      best.rate_param = r.value_or(0.0);
      const CMat wim = detail::block_complex(sol, wi), wem = detail::block_complex(sol, we);
      const CMat info = wim + wem;
      const RankOne ro = rank_one_extract(info);
      best.rank_ratio = ro.ratio;
      best.raw_we_norm = wem.norm();
      best.w_i = ro.v;
      best.w_e = CMat::Zero(n, n);
      best.objectives = metrics::moop_objectives(best.w_i, best.w_e, ch, params);
      best.theta = 1.0 / best.objectives.p_total;
      best.lifted = lift(best.w_i, best.w_e, params);
    }
    return t;
  };
  if (w.w1 == 0.0) {
    eval(std::nullopt);
  } else {
    detail::grid_golden(detail::rate_grid(ch, params, opts.grid_points, 1e-9), opts.rel_tol,
                        [&](double r) { return eval(r); });
  }
  best.sdp_solves = solves;
  return best;
}

}  // namespace swipt::moop
