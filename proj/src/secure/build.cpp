// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <stdexcept>
#include <string>

#include "detail.hpp"

namespace swipt::secure {

namespace detail {

void check_inputs(const ChannelSet& ch, const SecureParams& params) {
  params.validate();
  const int k_n = params.n_desired, m_n = params.n_roaming;
  if (static_cast<int>(ch.h_list.size()) != k_n || static_cast<int>(ch.g_list.size()) != m_n)
    throw std::invalid_argument("channel set does not match receiver counts");
  const Eigen::Index nt = ch.h_list.front().size();
  for (const auto& h : ch.h_list)
    if (h.size() != nt) throw std::invalid_argument("inconsistent desired channel length");
  for (const auto& g : ch.g_list)
    if (g.rows() != nt || g.cols() != params.n_rx_antennas) throw std::invalid_argument("bad roaming channel shape");
  if (nt <= params.n_rx_antennas) throw std::invalid_argument("require N_T > N_R");
}

}  // namespace detail

namespace {

using conic::Functional;
using conic::Relation;

// Hermitian basis of n x n matrices: diagonal units, then symmetric and skew pairs.
std::vector<CMat> hermitian_basis(int n) {
  std::vector<CMat> out;
  for (int i = 0; i < n; ++i) {
    CMat e = CMat::Zero(n, n);
    e(i, i) = 1.0;
    out.push_back(e);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      CMat re = CMat::Zero(n, n), im = CMat::Zero(n, n);
      re(i, j) = re(j, i) = 1.0;
      im(i, j) = cdouble(0.0, 1.0);
      im(j, i) = cdouble(0.0, -1.0);
      out.push_back(re);
      out.push_back(im);
    }
  return out;
}

}  // namespace

SecureSdp build_secure_sdp(const ChannelSet& ch, const SecureParams& params, const BuildOptions& opts) {
  detail::check_inputs(ch, params);
  const int k_n = params.n_desired, m_n = params.n_roaming, nr = params.n_rx_antennas;
  const int nt = static_cast<int>(ch.h_list.front().size());
  const bool fixed_dirs = !opts.directions.empty();
  if (fixed_dirs && static_cast<int>(opts.directions.size()) != k_n)
    throw std::invalid_argument("one beam direction per user required");
  const bool fixed_split = !opts.fixed_rho.empty();
  if (fixed_split && static_cast<int>(opts.fixed_rho.size()) != k_n)
    throw std::invalid_argument("one fixed splitting ratio per user required");
  for (double r : opts.fixed_rho)
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("fixed splitting ratio must lie in (0,1)");

  if (!(opts.margin >= 0.0 && opts.margin < 0.1)) throw std::invalid_argument("margin must lie in [0, 0.1)");
  if (!(opts.power_unit >= 0.0 && std::isfinite(opts.power_unit))) throw std::invalid_argument("bad power unit");
  const double up = 1.0 + opts.margin;
  SecureSdp sdp;
  auto& p = sdp.problem;
  // Units: rows in the largest received-power target, matrices in a rough single-user
  // power estimate (half split on the weakest channel), so the optimum sits near O(1).
  double e0 = 0.0, p_est = 0.0;
  for (int k = 0; k < k_n; ++k) {
    const double g2 = ch.h_list[k].squaredNorm();
    if (!(g2 > 0.0)) throw std::invalid_argument("degenerate desired channel");
    const double need = std::max(params.gamma_req[k] * params.sigma_s2, params.p_req1[k] / params.eta);
    e0 = std::max(e0, need);
    p_est = std::max(p_est, 2.0 * need / g2);
  }
  for (double x : params.p_req2) e0 = std::max(e0, x / params.eta);
  sdp.row_unit = e0;
  sdp.power_unit = opts.power_unit > 0.0 ? opts.power_unit : p_est;
  sdp.fixed_rho = opts.fixed_rho;
  const double s = sdp.power_unit / sdp.row_unit;
  const double noise = 1.0 / sdp.row_unit;

  sdp.w.assign(k_n, -1);
  sdp.q.assign(k_n, -1);
  sdp.q_unit.assign(k_n, 1.0);
  for (int k = 0; k < k_n; ++k) {
    if (fixed_dirs) {
      const double nrm = opts.directions[k].norm();
      if (!(nrm > 0.0)) throw std::invalid_argument("zero beam direction");
      sdp.directions.push_back(opts.directions[k] / nrm);
      sdp.q[k] = p.add_scalar();
      // Each power scalar in its own single-user estimate along the fixed direction.
      const double gain = std::norm(ch.h_list[k].dot(sdp.directions[k]));
      const double need = std::max(params.gamma_req[k] * params.sigma_s2, params.p_req1[k] / params.eta);
      sdp.q_unit[k] = gain > 0.0 ? std::max(2.0 * need / gain, 1e-300) / sdp.power_unit : 1.0;
    } else {
      sdp.w[k] = p.add_psd(2 * nt);
      ++sdp.layout.signal_blocks;
    }
  }
  sdp.v = p.add_psd(2 * nt);
  ++sdp.layout.signal_blocks;

  // c * Re Tr(A W_k) in row units.
  auto signal = [&](Functional& f, int k, const CMat& a, double c) -> Functional& {
    if (fixed_dirs) {
      const CVec& d = sdp.directions[k];
      return f.scalar(sdp.q[k], c * s * sdp.q_unit[k] * d.dot(a * d).real());
    }
    return f.psd(sdp.w[k], conic::embed_coefficient(a) * (c * s));
  };
  auto noise_term = [&](Functional& f, const CMat& a, double c) -> Functional& {
    return f.psd(sdp.v, conic::embed_coefficient(a) * (c * s));
  };
  auto row = [&](Functional f, Relation rel, double rhs, std::string name) {
    sdp.row_names.push_back(std::move(name));
    return p.constrain(std::move(f), rel, rhs);
  };

  Functional obj;
  const CMat eye = CMat::Identity(nt, nt);
  for (int k = 0; k < k_n; ++k) {
    if (fixed_dirs)
      obj.scalar(sdp.q[k], sdp.q_unit[k]);
    else
      obj.psd(sdp.w[k], conic::embed_coefficient(eye));
  }
  obj.psd(sdp.v, conic::embed_coefficient(eye));
  p.minimize(obj);

  sdp.t_block.assign(k_n, -1);
  sdp.u_block.assign(k_n, -1);
  if (!fixed_split) {
    for (int k = 0; k < k_n; ++k) {
      const std::string tag = "[" + std::to_string(k) + "]";
      sdp.t_block[k] = p.add_psd(2);
      ++sdp.layout.hyperbolic_blocks;
      row(Functional().psd_entry(sdp.t_block[k], 0, 1, 1.0), Relation::Equal, 1.0, "split" + tag);
      if (params.p_req1[k] > 0.0) {
        sdp.u_block[k] = p.add_psd(2);
        ++sdp.layout.hyperbolic_blocks;
        row(Functional().psd_entry(sdp.u_block[k], 0, 1, 1.0), Relation::Equal, 1.0, "split" + tag);
        row(Functional().psd_entry(sdp.t_block[k], 1, 1, 1.0).psd_entry(sdp.u_block[k], 1, 1, 1.0), Relation::Equal,
            1.0, "split" + tag);
      }
      row(Functional().psd_entry(sdp.t_block[k], 1, 1, 1.0), Relation::GreaterEqual, kRhoFloor, "box" + tag);
      row(Functional().psd_entry(sdp.t_block[k], 1, 1, 1.0), Relation::LessEqual, 1.0 - kRhoFloor, "box" + tag);
      ++sdp.layout.box;
    }
  }

  sdp.sinr_row.assign(k_n, -1);
  sdp.harvest_row.assign(k_n, -1);
  sdp.roam_row.assign(m_n, -1);
  for (int k = 0; k < k_n; ++k) {
    const std::string tag = "[" + std::to_string(k) + "]";
    const CMat hh = ch.h_list[k] * ch.h_list[k].adjoint();
    Functional c1;
    for (int j = 0; j < k_n; ++j) signal(c1, j, hh, j == k ? 1.0 / (up * params.gamma_req[k]) : -1.0);
    noise_term(c1, hh, -1.0);
    double rhs = params.sigma_ant2 * noise;
    if (fixed_split)
      rhs += params.sigma_s2 * noise / opts.fixed_rho[k];
    else
      c1.psd_entry(sdp.t_block[k], 0, 0, -params.sigma_s2 * noise);
    sdp.sinr_row[k] = row(c1, Relation::GreaterEqual, rhs, "sinr" + tag);
    ++sdp.layout.sinr;

    if (params.p_req1[k] > 0.0) {
      Functional c3;
      for (int j = 0; j < k_n; ++j) signal(c3, j, hh, 1.0);
      noise_term(c3, hh, 1.0);
      const double need = up * params.p_req1[k] / params.eta * noise;
      double rhs3 = -params.sigma_ant2 * noise;
      if (fixed_split)
        rhs3 += need / (1.0 - opts.fixed_rho[k]);
      else
        c3.psd_entry(sdp.u_block[k], 0, 0, -need);
      sdp.harvest_row[k] = row(c3, Relation::GreaterEqual, rhs3, "harvest" + tag);
      ++sdp.layout.harvest_desired;
    }
  }

  for (int m = 0; m < m_n; ++m) {
    if (!(params.p_req2[m] > 0.0)) continue;
    const CMat gg = ch.g_list[m] * ch.g_list[m].adjoint();
    Functional c4;
    for (int j = 0; j < k_n; ++j) signal(c4, j, gg, 1.0);
    noise_term(c4, gg, 1.0);
    sdp.roam_row[m] =
        row(c4, Relation::GreaterEqual, (up * params.p_req2[m] / params.eta - nr * params.sigma_ant2) * noise,
            "roaming[" + std::to_string(m) + "]");
    ++sdp.layout.harvest_roaming;
  }

  // G^H W_k G <= (psi - 1) (G^H V G + (sigma_ant2 + sigma_s2) I), with an explicit slack block.
  const std::vector<CMat> basis = hermitian_basis(nr);
  for (int m = 0; m < m_n; ++m) {
    const CMat& g = ch.g_list[m];
    for (int k = 0; k < k_n; ++k) {
      const double c = (params.psi(m, k) - 1.0) / up;
      const int slack = p.add_psd(2 * nr);
      ++sdp.layout.lmi_blocks;
      const std::string tag = "lmi[" + std::to_string(m) + "," + std::to_string(k) + "]";
      for (const CMat& e : basis) {
        const CMat a = g * e * g.adjoint();
        Functional f;
        signal(f, k, a, -1.0);
        noise_term(f, a, c);
        if (opts.single_user_detection)
          for (int j = 0; j < k_n; ++j)
            if (j != k) signal(f, j, a, c);
        f.psd(slack, -conic::embed_coefficient(e));
        row(f, Relation::Equal, -c * (params.sigma_ant2 + params.sigma_s2) * noise * e.trace().real(), tag);
      }
    }
  }
  return sdp;
}

}  // namespace swipt::secure
