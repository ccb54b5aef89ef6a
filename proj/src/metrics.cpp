// SPDX-License-Identifier: Apache-2.0
#include "swipt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swipt::metrics {

double quad(const CVec& h, const CMat& w) { return (h.adjoint() * w * h)(0, 0).real(); }

double rate_sep(const CVec& h, const CVec& w_i, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("noise power must be positive");
  return std::log2(1.0 + std::norm(h.dot(w_i)) / sigma2);
}

double harvested_sep(const CVec& g, const CVec& w_i, const CMat& w_e, double eta) {
  double p = std::norm(g.dot(w_i));
  if (w_e.size() > 0) p += quad(g, w_e);
  return eta * p;
}

double total_power(const CVec& w_i, const CMat& w_e, const SystemParams& params) {
  if (!(params.pa_efficiency > 0.0)) throw std::invalid_argument("pa efficiency must be positive");
  double p = w_i.squaredNorm();
  if (w_e.size() > 0) p += w_e.trace().real();
  return p / params.pa_efficiency + params.circuit_power();
}

MoopObjectives moop_objectives(const CVec& w_i, const CMat& w_e, const ChannelSet& ch, const SystemParams& params) {
  MoopObjectives o;
  o.p_tx = w_i.squaredNorm() + (w_e.size() > 0 ? w_e.trace().real() : 0.0);
  o.p_total = total_power(w_i, w_e, params);
  o.rate = rate_sep(ch.h, w_i, params.noise_power);
  o.harvested = harvested_sep(ch.g, w_i, w_e, params.eta);
  o.ir_ee = o.rate / o.p_total;
  o.eh_ee = o.harvested / o.p_total;
  return o;
}

double sinr_k(int k, const std::vector<CVec>& h, const std::vector<CMat>& w, const CMat& v, double rho, double sigma_ant2,
              double sigma_s2) {
  if (rho <= 0.0) return 0.0;
  const CVec& hk = h.at(k);
  double interference = quad(hk, v) + sigma_ant2;
  for (size_t j = 0; j < w.size(); ++j)
    if (static_cast<int>(j) != k) interference += quad(hk, w[j]);
  return rho * quad(hk, w.at(k)) / (rho * interference + sigma_s2);
}

double eav_rate_upper(const CMat& g, const CMat& w_k, const CMat& v, double sigma_ant2, double sigma_s2) {
  const Eigen::Index nr = g.cols();
  const CMat q = g.adjoint() * v * g + (sigma_ant2 + sigma_s2) * CMat::Identity(nr, nr);
  Eigen::LLT<CMat> lq(0.5 * (q + q.adjoint()));
  if (lq.info() != Eigen::Success) throw std::domain_error("eavesdropper interference covariance not positive definite");
  // det(I + Q^{-1} S) = det(I + L^{-1} S L^{-H})
  const CMat x = lq.matrixL().solve(g.adjoint() * w_k * g);
  CMat m = lq.matrixL().solve(x.adjoint()).adjoint();
  m = CMat::Identity(nr, nr) + 0.5 * (m + m.adjoint());
  Eigen::LLT<CMat> lm(m);
  if (lm.info() != Eigen::Success) throw std::domain_error("eavesdropper rate argument not positive definite");
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < nr; ++i) logdet += 2.0 * std::log2(lm.matrixL()(i, i).real());
  return std::max(0.0, logdet);
}

double secrecy_rate(double rate, const std::vector<double>& eav_rates) {
  double worst = 0.0;
  for (double r : eav_rates) worst = std::max(worst, r);
  return std::max(0.0, rate - worst);
}

double harvested_desired(const CVec& h, const std::vector<CMat>& w, const CMat& v, double rho, double eta,
                         double sigma_ant2) {
  double p = quad(h, v) + sigma_ant2;
  for (const auto& wj : w) p += quad(h, wj);
  return eta * (1.0 - rho) * p;
}

double harvested_roaming(const CMat& g, const std::vector<CMat>& w, const CMat& v, double rho, double eta,
                         double sigma_ant2) {
  const CMat gg = g * g.adjoint();
  double p = (gg * v).trace().real() + g.cols() * sigma_ant2;
  for (const auto& wk : w) p += (gg * wk).trace().real();
  return eta * (1.0 - rho) * p;
}

SecureQoS secure_qos(const ChannelSet& ch, const std::vector<CMat>& w, const CMat& v, const std::vector<double>& rho,
                     const SecureParams& params, bool single_user_detection) {
  const int k_n = static_cast<int>(ch.h_list.size());
  const int m_n = static_cast<int>(ch.g_list.size());
  SecureQoS q;
  q.eav_rate_upper = Mat::Zero(m_n, k_n);
  for (int k = 0; k < k_n; ++k) {
    q.sinr.push_back(sinr_k(k, ch.h_list, w, v, rho[k], params.sigma_ant2, params.sigma_s2));
    q.rate.push_back(std::log2(1.0 + q.sinr.back()));
    std::vector<double> eav;
    for (int m = 0; m < m_n; ++m) {
      CMat interf = v;
      if (single_user_detection)
        for (int j = 0; j < k_n; ++j)
          if (j != k) interf += w[j];
      q.eav_rate_upper(m, k) = eav_rate_upper(ch.g_list[m], w[k], interf, params.sigma_ant2, params.sigma_s2);
      eav.push_back(q.eav_rate_upper(m, k));
    }
    q.secrecy_rate.push_back(secrecy_rate(q.rate.back(), eav));
    q.harvested_desired.push_back(harvested_desired(ch.h_list[k], w, v, rho[k], params.eta, params.sigma_ant2));
  }
  for (int m = 0; m < m_n; ++m)
    q.harvested_roaming.push_back(harvested_roaming(ch.g_list[m], w, v, 0.0, params.eta, params.sigma_ant2));
  return q;
}

}  // namespace swipt::metrics
