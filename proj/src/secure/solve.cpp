// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "detail.hpp"
#include "swipt/metrics.hpp"
#include "swipt/moop.hpp"

namespace swipt::secure {

namespace detail {

SecureAllocation solve_sdp(const SecureSdp& sdp, const ChannelSet& ch, const SecureParams& params,
                           const SecureOptions& opts) {
  const conic::Solution sol = conic::solve(sdp.problem, opts.solver);
  SecureAllocation a;
  a.status = sol.status;
  a.sdp_solves = 1;
  const int k_n = params.n_desired;
  if (sol.status == conic::Status::Infeasible) {
    const double big = sol.duals.cwiseAbs().maxCoeff();
    for (int i = 0; i < sol.duals.size(); ++i)
      if (std::abs(sol.duals(i)) > 1e-6 * big &&
          std::find(a.certificate.begin(), a.certificate.end(), sdp.row_names[i]) == a.certificate.end())
        a.certificate.push_back(sdp.row_names[i]);
  }
  const double pu = sdp.power_unit;
  a.relaxed_objective = pu * sol.primal_objective;
  if (sol.status != conic::Status::Optimal) return a;

  for (int k = 0; k < k_n; ++k) {
    if (sdp.w[k] >= 0) {
      a.w.push_back(pu * conic::hermitian_unembed(sol.primal.psd[sdp.w[k]]));
    } else {
      const double q = std::max(0.0, sol.primal.scalars(sdp.q[k])) * sdp.q_unit[k];
      const CVec& d = sdp.directions[k];
      a.w.push_back(pu * q * d * d.adjoint());
      a.beams.push_back(std::sqrt(pu * q) * d);
    }
    if (!sdp.fixed_rho.empty())
      a.rho.push_back(sdp.fixed_rho[k]);
    else
      a.rho.push_back(sol.primal.psd[sdp.t_block[k]](1, 1));
  }
  a.v = pu * conic::hermitian_unembed(sol.primal.psd[sdp.v]);

  auto dual = [&](int r) { return r >= 0 ? pu * sol.duals(r) / sdp.row_unit : 0.0; };
  for (int k = 0; k < k_n; ++k) {
    a.duals.alpha.push_back(dual(sdp.sinr_row[k]));
    a.duals.beta.push_back(dual(sdp.harvest_row[k]));
  }
  for (int r : sdp.roam_row) a.duals.nu.push_back(dual(r));
  finish(a, ch, params, opts.single_user_detection);
  return a;
}

SecureAllocation solve(const ChannelSet& ch, const SecureParams& params, BuildOptions b, const SecureOptions& opts) {
  const SecureSdp sdp = build_secure_sdp(ch, params, b);
  const SecureAllocation a = solve_sdp(sdp, ch, params, opts);
  // A stall is retried once in units of the stalled iterate's objective.
  const double ratio = a.relaxed_objective / sdp.power_unit;
  if (a.status != conic::Status::NumericalLimit || !std::isfinite(ratio) || !(ratio > 0.0)) return a;
  b.power_unit = a.relaxed_objective;
  SecureAllocation r = solve_sdp(build_secure_sdp(ch, params, b), ch, params, opts);
  r.sdp_solves += a.sdp_solves;
  return r;
}

void finish(SecureAllocation& a, const ChannelSet& ch, const SecureParams& params, bool single_user_detection) {
  const int k_n = static_cast<int>(a.w.size());
  const bool have_beams = static_cast<int>(a.beams.size()) == k_n;
  a.rank_ratio.clear();
  a.signal_power = 0.0;
  for (int k = 0; k < k_n; ++k) {
    a.w[k] = 0.5 * (a.w[k] + a.w[k].adjoint());
    const moop::RankOne ro = moop::rank_one_extract(a.w[k]);
    a.rank_ratio.push_back(ro.ratio);
    if (!have_beams) a.beams.push_back(ro.v);
    a.signal_power += a.w[k].trace().real();
  }
  a.v = 0.5 * (a.v + a.v.adjoint());
  a.an_power = a.v.trace().real();
  a.p_tx = a.signal_power + a.an_power;
  a.qos = metrics::secure_qos(ch, a.w, a.v, a.rho, params, single_user_detection);
}

}  // namespace detail

const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::Optimal: return "optimal";
    case Scheme::ZeroForcing: return "baseline1";
    case Scheme::ZeroForcingHalfSplit: return "baseline2";
  }
  return "unknown";
}

SecureAllocation solve_secure_relaxed(const ChannelSet& ch, const SecureParams& params, const SecureOptions& opts) {
  BuildOptions b;
  b.single_user_detection = opts.single_user_detection;
  b.margin = opts.margin;
  return detail::solve(ch, params, b, opts);
}

SecureAllocation rank_one_reconstruct(const SecureAllocation& relaxed, const ChannelSet& ch,
                                      const SecureParams& params, const SecureOptions& opts) {
  const int k_n = static_cast<int>(relaxed.w.size());
  if (k_n != params.n_desired) throw std::invalid_argument("allocation does not match receiver count");
  SecureAllocation a = relaxed;
  a.beams.clear();
  std::vector<CVec> dirs;
  for (int k = 0; k < k_n; ++k) {
    const CVec& h = ch.h_list[k];
    const CVec x = relaxed.w[k] * h;
    const double d = h.dot(x).real();
    if (!(d > 0.0)) throw std::domain_error("reconstruction impossible: h^H W h = 0");
    const CMat wt = x * x.adjoint() / d;
    a.v += relaxed.w[k] - wt;
    a.w[k] = wt;
    a.beams.push_back(x / std::sqrt(d));
    dirs.push_back(x / x.norm());
  }
  detail::finish(a, ch, params, opts.single_user_detection);
  if (verify_secure(a, ch, params, opts.single_user_detection, opts.verify_tol).ok()) return a;

  BuildOptions b;
  b.single_user_detection = opts.single_user_detection;
  b.margin = opts.margin;
  b.directions = dirs;
  SecureAllocation f = detail::solve(ch, params, b, opts);
  f.fallback = true;
  f.sdp_solves += relaxed.sdp_solves;
  f.relaxed_objective = relaxed.relaxed_objective;
  return f;
}

SecureAllocation solve_secure(const ChannelSet& ch, const SecureParams& params, const SecureOptions& opts) {
  const SecureAllocation r = solve_secure_relaxed(ch, params, opts);
  if (r.status != conic::Status::Optimal) return r;
  return rank_one_reconstruct(r, ch, params, opts);
}

double optimal_rho_from_duals(double alpha, double beta, double sigma_s2, double eta, double p_req1) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw std::invalid_argument("duals must be positive");
  if (!(sigma_s2 > 0.0) || !(eta > 0.0) || !(p_req1 >= 0.0)) throw std::invalid_argument("bad physical parameters");
  const double a = std::sqrt(alpha * sigma_s2 * eta), b = std::sqrt(beta * p_req1);
  return a / (a + b);
}

std::vector<CVec> zf_directions(const ChannelSet& ch) {
  const int k_n = static_cast<int>(ch.h_list.size());
  if (k_n == 0) return {};
  const Eigen::Index nt = ch.h_list.front().size();
  if (k_n > nt) throw std::invalid_argument("zero-forcing needs K <= N_T");
  std::vector<CVec> out;
  for (int k = 0; k < k_n; ++k) {
    CMat hmk(nt, k_n - 1);
    for (int j = 0, c = 0; j < k_n; ++j)
      if (j != k) hmk.col(c++) = ch.h_list[j];
    Eigen::SelfAdjointEigenSolver<CMat> es(hmk * hmk.adjoint());
    // Eigenvalues ascend, so the leading N_T - K + 1 columns span the null space. Within that
    // (degenerate) eigenspace the first basis vector is taken along the projection of h_k.
    const CMat null = es.eigenvectors().leftCols(nt - (k_n - 1));
    CVec u = null * (null.adjoint() * ch.h_list[k]);
    if (!(u.norm() > 1e-12 * ch.h_list[k].norm())) u = null.col(0);
    out.push_back(u / u.norm());
  }
  return out;
}

SecureAllocation baseline_zf(const ChannelSet& ch, const SecureParams& params, Scheme scheme,
                             const SecureOptions& opts) {
  if (scheme == Scheme::Optimal) throw std::invalid_argument("baseline_zf needs a zero-forcing scheme");
  detail::check_inputs(ch, params);
  BuildOptions b;
  b.single_user_detection = opts.single_user_detection;
  b.margin = opts.margin;
  b.directions = zf_directions(ch);
  if (scheme == Scheme::ZeroForcingHalfSplit) b.fixed_rho.assign(params.n_desired, 0.5);
  SecureAllocation a = detail::solve(ch, params, b, opts);
  if (a.status != conic::Status::Optimal) return a;
  // With zero-forcing beams the SINR rows of strong users carry a large artificial-noise term
  // that nearly cancels, so solver residuals can exceed the margin. The shortfall is closed by
  // scaling that user's power, which zero-forcing keeps from reaching the other users.
  bool scaled = false;
  for (int k = 0; k < params.n_desired; ++k) {
    const double sinr = metrics::sinr_k(k, ch.h_list, a.w, a.v, a.rho[k], params.sigma_ant2, params.sigma_s2);
    const double f = params.gamma_req[k] / sinr;
    if (f > 1.0 && f < 1.0 + 1e-4) {
      a.w[k] *= f;
      a.beams[k] *= std::sqrt(f);
      scaled = true;
    }
  }
  if (scaled) detail::finish(a, ch, params, opts.single_user_detection);
  return a;
}

SecureAllocation run_scheme(const ChannelSet& ch, const SecureParams& params, Scheme scheme,
                            const SecureOptions& opts) {
  return scheme == Scheme::Optimal ? solve_secure(ch, params, opts) : baseline_zf(ch, params, scheme, opts);
}

}  // namespace swipt::secure
