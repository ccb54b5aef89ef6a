// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <string>

#include "detail.hpp"

namespace swipt::secure {

CMat eavesdropper_interference(const SecureAllocation& a, int k, bool single_user_detection) {
  CMat q = a.v;
  if (single_user_detection)
    for (size_t j = 0; j < a.w.size(); ++j)
      if (static_cast<int>(j) != k) q += a.w[j];
  return q;
}

namespace {

double min_eig(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace

SecureReport verify_secure(const SecureAllocation& a, const ChannelSet& ch, const SecureParams& params,
                           bool single_user_detection, double tol) {
  SecureReport r;
  auto flag = [&](const char* what, int idx, double excess) { r.violations.push_back({what, idx, excess}); };
  const int k_n = params.n_desired, m_n = params.n_roaming;
  if (static_cast<int>(a.w.size()) != k_n || static_cast<int>(a.rho.size()) != k_n ||
      static_cast<int>(ch.h_list.size()) != k_n || static_cast<int>(ch.g_list.size()) != m_n) {
    flag("shape", -1, 1.0);
    return r;
  }
  r.min_secrecy_margin = k_n > 0 ? INFINITY : 0.0;
  r.max_eav_excess = -INFINITY;
  for (int k = 0; k < k_n; ++k) {
    const double scale = std::max(a.w[k].norm(), 1e-300);
    if (min_eig(a.w[k]) < -1e-9 * scale) flag("psd-w", k, -min_eig(a.w[k]) / scale);
    if (!(a.rho[k] >= 0.0 && a.rho[k] <= 1.0)) flag("rho", k, std::abs(a.rho[k] - std::clamp(a.rho[k], 0.0, 1.0)));
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (a.w[k] + a.w[k].adjoint()), Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    if (ev(ev.size() - 1) > 0.0 && ev.size() > 1)
      r.max_rank_ratio = std::max(r.max_rank_ratio, std::max(0.0, ev(ev.size() - 2)) / ev(ev.size() - 1));
  }
  if (min_eig(a.v) < -1e-9 * std::max(a.v.norm(), 1e-300)) flag("psd-v", -1, -min_eig(a.v));
  if (!r.violations.empty()) return r;

  const double n0 = params.sigma_ant2 + params.sigma_s2;
  for (int k = 0; k < k_n; ++k) {
    const double sinr = metrics::sinr_k(k, ch.h_list, a.w, a.v, a.rho[k], params.sigma_ant2, params.sigma_s2);
    const double g = params.gamma_req[k];
    if (sinr < g * (1.0 - tol)) flag("sinr", k, 1.0 - sinr / g);
    double worst_eav = 0.0, r_floor = 0.0;
    for (int m = 0; m < m_n; ++m) {
      const CMat& gm = ch.g_list[m];
      const CMat interf = eavesdropper_interference(a, k, single_user_detection);
      const double eav = metrics::eav_rate_upper(gm, a.w[k], interf, params.sigma_ant2, params.sigma_s2);
      worst_eav = std::max(worst_eav, eav);
      r_floor = std::max(r_floor, params.r_max(m, k));
      r.max_eav_excess = std::max(r.max_eav_excess, eav - params.r_max(m, k));
      if (eav > params.r_max(m, k) + tol) flag("eavesdrop", m * k_n + k, eav - params.r_max(m, k));
      const CMat q = gm.adjoint() * interf * gm + n0 * CMat::Identity(gm.cols(), gm.cols());
      const CMat rhs = (params.psi(m, k) - 1.0) * q;
      const double lmi = -min_eig(rhs - gm.adjoint() * a.w[k] * gm) / rhs.norm();
      r.max_lmi_violation = std::max(r.max_lmi_violation, lmi);
      if (lmi > tol) flag("lmi", m * k_n + k, lmi);
    }
    const double margin = std::log2(1.0 + sinr) - worst_eav - (std::log2(1.0 + g) - r_floor);
    r.min_secrecy_margin = std::min(r.min_secrecy_margin, margin);
    if (margin < -tol) flag("secrecy", k, -margin);
    if (params.p_req1[k] > 0.0) {
      const double e = metrics::harvested_desired(ch.h_list[k], a.w, a.v, a.rho[k], params.eta, params.sigma_ant2);
      if (e < params.p_req1[k] * (1.0 - tol)) flag("harvest", k, 1.0 - e / params.p_req1[k]);
    }
  }
  for (int m = 0; m < m_n; ++m)
    if (params.p_req2[m] > 0.0) {
      const double e = metrics::harvested_roaming(ch.g_list[m], a.w, a.v, 0.0, params.eta, params.sigma_ant2);
      if (e < params.p_req2[m] * (1.0 - tol)) flag("roaming", m, 1.0 - e / params.p_req2[m]);
    }
  if (m_n == 0) r.max_eav_excess = 0.0;
  return r;
}

}  // namespace swipt::secure
