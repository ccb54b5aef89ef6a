// SPDX-License-Identifier: Apache-2.0
#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "swipt/metrics.hpp"
#include "swipt/secure.hpp"

using namespace swipt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SecureParams hand_params(int k_n, int m_n, int nt, int nr) {
  SecureParams p;
  p.n_tx_antennas = nt;
  p.n_rx_antennas = nr;
  p.n_desired = k_n;
  p.n_roaming = m_n;
  p.sigma_ant2 = 1e-9;
  p.sigma_s2 = 1e-6;
  p.gamma_req.assign(k_n, 10.0);
  p.r_max = Mat::Constant(m_n, k_n, 1.0);
  p.p_req1.assign(k_n, 1e-4);
  p.p_req2.assign(m_n, 1e-4);
  p.eta = 0.5;
  return p;
}

ChannelSet hand_channels(std::mt19937_64& rng, const SecureParams& p, double scale = 1e-2) {
  ChannelSet ch;
  for (int k = 0; k < p.n_desired; ++k) ch.h_list.push_back(oracle::random_cvec(rng, p.n_tx_antennas, scale));
  for (int m = 0; m < p.n_roaming; ++m) {
    CMat g(p.n_tx_antennas, p.n_rx_antennas);
    for (int r = 0; r < p.n_rx_antennas; ++r) g.col(r) = oracle::random_cvec(rng, p.n_tx_antennas, scale);
    ch.g_list.push_back(g);
  }
  return ch;
}

// Single user, no roaming receivers: MRT with power p(rho) = max(SINR need, harvest need) / |h|^2,
// minimized over rho on a dense grid and then by golden section.
double single_user_oracle(double h2, const SecureParams& p) {
  auto power = [&](double rho) {
    const double sinr = p.gamma_req[0] * (p.sigma_ant2 + p.sigma_s2 / rho);
    const double harvest = p.p_req1[0] / (p.eta * (1.0 - rho)) - p.sigma_ant2;
    return std::max(sinr, harvest) / h2;
  };
  const int n = 20000;
  int best = 1;
  for (int i = 1; i < n; ++i)
    if (power(static_cast<double>(i) / n) < power(static_cast<double>(best) / n)) best = i;
  double lo = (best - 1.0) / n, hi = (best + 1.0) / n;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (power(m1) < power(m2))
      hi = m2;
    else
      lo = m1;
  }
  return power(0.5 * (lo + hi));
}

double total_trace(const secure::SecureAllocation& a) {
  double t = a.v.trace().real();
  for (const auto& w : a.w) t += w.trace().real();
  return t;
}

}  // namespace

TEST_CASE("secure SDP layout for the smallest hand instance") {
  const SecureParams p = hand_params(1, 1, 2, 1);
  std::mt19937_64 rng(3);
  const ChannelSet ch = hand_channels(rng, p);
  const auto sdp = secure::build_secure_sdp(ch, p);
  CHECK(sdp.layout.sinr == 1);
  CHECK(sdp.layout.lmi_blocks == 1);
  CHECK(sdp.layout.harvest_desired == 1);
  CHECK(sdp.layout.harvest_roaming == 1);
  CHECK(sdp.layout.hyperbolic_blocks == 2);
  CHECK(sdp.layout.box == 1);
  CHECK(sdp.layout.signal_blocks == 2);
  // W, V, two hyperbolic blocks and the LMI slack.
  CHECK(sdp.problem.num_psd() == 5);
  CHECK(static_cast<int>(sdp.row_names.size()) == sdp.problem.num_constraints());
}

TEST_CASE("one bit of leakage gives a unit LMI coefficient") {
  SecureParams p = hand_params(1, 1, 2, 1);
  CHECK(p.psi(0, 0) == 2.0);
  std::mt19937_64 rng(4);
  const ChannelSet ch = hand_channels(rng, p);
  const auto sdp = secure::build_secure_sdp(ch, p);
  int row = -1;
  for (int i = 0; i < sdp.problem.num_constraints(); ++i)
    if (sdp.row_names[i] == "lmi[0,0]") row = i;
  REQUIRE(row >= 0);
  const auto& terms = sdp.problem.constraints()[row].lhs.psd_terms();
  const Mat& on_w = terms.at(sdp.w[0]);
  const Mat& on_v = terms.at(sdp.v);
  CHECK((on_v + on_w).norm() == 0.0);
  CHECK_THAT(sdp.problem.constraints()[row].rhs, WithinRel(-(p.sigma_ant2 + p.sigma_s2) / sdp.row_unit, 1e-15));
}

TEST_CASE("hyperbolic block with rho one half forces t to two") {
  conic::Problem prob;
  const int b = prob.add_psd(2);
  prob.constrain(conic::Functional().psd_entry(b, 0, 1, 1.0), conic::Relation::Equal, 1.0);
  prob.constrain(conic::Functional().psd_entry(b, 1, 1, 1.0), conic::Relation::Equal, 0.5);
  prob.minimize(conic::Functional().psd_entry(b, 0, 0, 1.0));
  const auto sol = conic::solve(prob);
  REQUIRE(sol.status == conic::Status::Optimal);
  CHECK_THAT(sol.primal_objective, WithinAbs(2.0, 1e-7));
}

TEST_CASE("invalid secure inputs are rejected") {
  std::mt19937_64 rng(5);
  SecureParams p = hand_params(1, 1, 2, 1);
  const ChannelSet ch = hand_channels(rng, p);
  SecureParams bad = p;
  bad.r_max(0, 0) = 0.0;  // psi = 1
  CHECK_THROWS_AS(secure::build_secure_sdp(ch, bad), std::invalid_argument);
  bad = p;
  bad.n_rx_antennas = 2;
  CHECK_THROWS_AS(secure::build_secure_sdp(ch, bad), std::invalid_argument);

  const SecureParams p3 = hand_params(3, 0, 2, 1);
  const ChannelSet ch3 = hand_channels(rng, p3);
  CHECK_THROWS_AS(secure::zf_directions(ch3), std::invalid_argument);
  CHECK_THROWS_AS(secure::baseline_zf(ch3, p3, secure::Scheme::ZeroForcing), std::invalid_argument);
  CHECK_THROWS_AS(secure::baseline_zf(ch, p, secure::Scheme::Optimal), std::invalid_argument);
}

TEST_CASE("single user without roaming receivers matches the grid oracle") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const SecureParams p = hand_params(1, 0, 2, 1);
    const ChannelSet ch = hand_channels(rng, p);
    const auto a = secure::solve_secure(ch, p);
    REQUIRE(a.status == conic::Status::Optimal);
    const CVec& h = ch.h_list[0];
    const double oracle = single_user_oracle(h.squaredNorm(), p);
    CHECK_THAT(a.p_tx, WithinRel(oracle, 1e-4));
    const double align = std::norm(h.dot(a.beams[0])) / (h.squaredNorm() * a.beams[0].squaredNorm());
    CHECK_THAT(align, WithinAbs(1.0, 1e-6));
    CHECK(secure::verify_secure(a, ch, p).ok());
  }
}

TEST_CASE("vanishing QoS targets give vanishing power") {
  std::mt19937_64 rng(7);
  SecureParams p = hand_params(2, 1, 4, 1);
  const ChannelSet ch = hand_channels(rng, p);
  const auto base = secure::solve_secure(ch, p);
  REQUIRE(base.status == conic::Status::Optimal);
  p.gamma_req.assign(2, 1e-9);
  p.p_req1.assign(2, 0.0);
  p.p_req2.assign(1, 0.0);
  const auto tiny = secure::solve_secure(ch, p);
  REQUIRE(tiny.status == conic::Status::Optimal);
  CHECK(tiny.p_tx < 1e-6 * base.p_tx);
  CHECK(secure::build_secure_sdp(ch, p).layout.harvest_desired == 0);
  CHECK(secure::build_secure_sdp(ch, p).layout.harvest_roaming == 0);
}

TEST_CASE("transmit power grows with the SINR target") {
  for (int trial = 0; trial < 4; ++trial) {
    const SecureParams p10 = table_3_1(8, 10.0), p15 = table_3_1(8, 15.0);
    const ChannelSet ch = generate_secure_channels(p10, 11, trial);
    const auto a10 = secure::solve_secure(ch, p10);
    const auto a15 = secure::solve_secure(ch, p15);
    REQUIRE(a10.status == conic::Status::Optimal);
    REQUIRE(a15.status == conic::Status::Optimal);
    CHECK(a10.p_tx <= a15.p_tx * (1.0 + 1e-6));
  }
}

TEST_CASE("relaxation is tight and reconstruction keeps every constraint") {
  int with_noise = 0;
  const int trials = 20;
  for (int trial = 0; trial < trials; ++trial) {
    const SecureParams p = table_3_1();
    const ChannelSet ch = generate_secure_channels(p, 12, trial);
    const auto relaxed = secure::solve_secure_relaxed(ch, p);
    REQUIRE(relaxed.status == conic::Status::Optimal);
    const auto a = secure::rank_one_reconstruct(relaxed, ch, p);
    REQUIRE(a.status == conic::Status::Optimal);
    const auto rep = secure::verify_secure(a, ch, p);
    CHECK(rep.ok());
    CHECK(rep.max_rank_ratio <= 1e-6);
    CHECK(rep.max_eav_excess <= 1e-6);
    CHECK(rep.min_secrecy_margin >= -1e-6);
    if (!a.fallback) CHECK_THAT(a.p_tx, WithinRel(relaxed.p_tx, 1e-8));
    if (a.an_power > 1e-6 * a.p_tx) ++with_noise;
  }
  // Empirical: the artificial noise is active on nearly every realization.
  CHECK(with_noise >= 19);
}

TEST_CASE("reconstruction preserves trace and the desired signal power") {
  const SecureParams p = table_3_1();
  const ChannelSet ch = generate_secure_channels(p, 13, 0);
  const auto relaxed = secure::solve_secure_relaxed(ch, p);
  REQUIRE(relaxed.status == conic::Status::Optimal);
  const auto a = secure::rank_one_reconstruct(relaxed, ch, p);
  REQUIRE_FALSE(a.fallback);
  CHECK_THAT(total_trace(a), WithinRel(total_trace(relaxed), 1e-10));
  for (int k = 0; k < p.n_desired; ++k) {
    const CVec& h = ch.h_list[k];
    CHECK_THAT(h.dot(a.w[k] * h).real(), WithinRel(h.dot(relaxed.w[k] * h).real(), 1e-12));
  }
  // A rank-one input comes back unchanged.
  const auto again = secure::rank_one_reconstruct(a, ch, p);
  REQUIRE_FALSE(again.fallback);
  for (int k = 0; k < p.n_desired; ++k) CHECK((again.w[k] - a.w[k]).norm() <= 1e-12 * a.w[k].norm());
  CHECK((again.v - a.v).norm() <= 1e-12 * a.v.norm());
}

TEST_CASE("reconstruction moves the part orthogonal to the channel into the noise") {
  std::mt19937_64 rng(14);
  const SecureParams p = hand_params(1, 0, 3, 1);
  const ChannelSet ch = hand_channels(rng, p);
  const CVec& h = ch.h_list[0];
  CVec x = oracle::random_cvec(rng, 3);
  x -= h * (h.dot(x) / h.squaredNorm());
  x.normalize();
  const double need = 20.0 * p.gamma_req[0] * (p.sigma_ant2 + 2.0 * p.sigma_s2) / h.squaredNorm();
  secure::SecureAllocation in;
  in.w.push_back(need * h * h.adjoint() / h.squaredNorm() + 0.3 * need * x * x.adjoint());
  in.v = CMat::Zero(3, 3);
  in.rho.push_back(0.5);
  in.status = conic::Status::Optimal;
  const auto out = secure::rank_one_reconstruct(in, ch, p);
  REQUIRE_FALSE(out.fallback);
  CHECK_THAT(total_trace(out), WithinRel(1.3 * need, 1e-12));
  CHECK((out.v - 0.3 * need * x * x.adjoint()).norm() <= 1e-12 * need);
  CHECK(out.rank_ratio[0] <= 1e-12);
}

TEST_CASE("reconstruction rejects a signal blind to its channel") {
  std::mt19937_64 rng(15);
  const SecureParams p = hand_params(1, 0, 2, 1);
  const ChannelSet ch = hand_channels(rng, p);
  secure::SecureAllocation in;
  in.w.push_back(CMat::Zero(2, 2));
  in.v = CMat::Zero(2, 2);
  in.rho.push_back(0.5);
  CHECK_THROWS_AS(secure::rank_one_reconstruct(in, ch, p), std::domain_error);
}

TEST_CASE("splitting ratio from multipliers") {
  const double s2 = 2e-3, eta = 0.5, p1 = 1e-3;
  // alpha s2 eta = beta p1.
  CHECK_THAT(secure::optimal_rho_from_duals(3.0, 3.0 * s2 * eta / p1, s2, eta, p1), WithinAbs(0.5, 1e-15));
  CHECK(secure::optimal_rho_from_duals(1.0, 1e-30, s2, eta, p1) > 1.0 - 1e-10);
  CHECK_THROWS_AS(secure::optimal_rho_from_duals(0.0, 1.0, s2, eta, p1), std::invalid_argument);
  CHECK_THROWS_AS(secure::optimal_rho_from_duals(1.0, -1.0, s2, eta, p1), std::invalid_argument);
}

TEST_CASE("multiplier splitting ratio matches the primal on single-user instances") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 10; ++trial) {
    const SecureParams p = hand_params(1, 0, 2, 1);
    const ChannelSet ch = hand_channels(rng, p);
    const auto a = secure::solve_secure_relaxed(ch, p);
    REQUIRE(a.status == conic::Status::Optimal);
    const double rho = secure::optimal_rho_from_duals(a.duals.alpha[0], a.duals.beta[0], p.sigma_s2, p.eta, p.p_req1[0]);
    CHECK_THAT(rho, WithinAbs(a.rho[0], 1e-4));
  }
}

TEST_CASE("zero-forcing directions null the other users") {
  for (int trial = 0; trial < 5; ++trial) {
    const SecureParams p = table_3_1();
    const ChannelSet ch = generate_secure_channels(p, 17, trial);
    const auto dirs = secure::zf_directions(ch);
    REQUIRE(static_cast<int>(dirs.size()) == p.n_desired);
    for (int k = 0; k < p.n_desired; ++k) {
      CHECK_THAT(dirs[k].norm(), WithinAbs(1.0, 1e-12));
      CHECK(std::abs(ch.h_list[k].normalized().dot(dirs[k])) > 0.0);
      for (int j = 0; j < p.n_desired; ++j)
        if (j != k) CHECK(std::abs(ch.h_list[j].normalized().dot(dirs[k])) <= 1e-8);
    }
  }
}

TEST_CASE("zero-forcing on orthogonal channels is maximum-ratio and optimal") {
  const SecureParams p = hand_params(2, 0, 2, 1);
  ChannelSet ch;
  ch.h_list.push_back(CVec::Unit(2, 0) * cdouble(3e-3, 1e-3));
  ch.h_list.push_back(CVec::Unit(2, 1) * cdouble(-1e-3, 2e-3));
  const auto dirs = secure::zf_directions(ch);
  for (int k = 0; k < 2; ++k) CHECK_THAT(std::abs(ch.h_list[k].normalized().dot(dirs[k])), WithinAbs(1.0, 1e-12));
  const auto opt = secure::run_scheme(ch, p, secure::Scheme::Optimal);
  const auto zf = secure::run_scheme(ch, p, secure::Scheme::ZeroForcing);
  REQUIRE(opt.status == conic::Status::Optimal);
  REQUIRE(zf.status == conic::Status::Optimal);
  CHECK_THAT(zf.p_tx, WithinRel(opt.p_tx, 1e-4));
}

TEST_CASE("schemes are ordered and all meet the secrecy floor") {
  for (int trial = 0; trial < 5; ++trial) {
    const SecureParams p = table_3_1();
    const ChannelSet ch = generate_secure_channels(p, 18, trial);
    const auto opt = secure::run_scheme(ch, p, secure::Scheme::Optimal);
    const auto zf1 = secure::run_scheme(ch, p, secure::Scheme::ZeroForcing);
    const auto zf2 = secure::run_scheme(ch, p, secure::Scheme::ZeroForcingHalfSplit);
    REQUIRE(opt.status == conic::Status::Optimal);
    REQUIRE(zf1.status == conic::Status::Optimal);
    REQUIRE(zf2.status == conic::Status::Optimal);
    CHECK(opt.p_tx <= zf1.p_tx * (1.0 + 1e-6));
    CHECK(zf1.p_tx <= zf2.p_tx * (1.0 + 1e-6));
    for (double r : zf2.rho) CHECK(r == 0.5);
    for (const auto* a : {&opt, &zf1, &zf2}) {
      const auto rep = secure::verify_secure(*a, ch, p);
      CHECK(rep.ok());
      for (int k = 0; k < p.n_desired; ++k)
        CHECK(a->qos.secrecy_rate[k] >= std::log2(1.0 + p.gamma_req[k]) - 1.0 - 1e-6);
    }
  }
}

TEST_CASE("weakened artificial noise is caught by verification") {
  const SecureParams p = table_3_1();
  const ChannelSet ch = generate_secure_channels(p, 19, 0);
  auto a = secure::solve_secure(ch, p);
  REQUIRE(a.status == conic::Status::Optimal);
  REQUIRE(secure::verify_secure(a, ch, p).ok());
  a.v *= 0.9;
  const auto rep = secure::verify_secure(a, ch, p);
  REQUIRE_FALSE(rep.ok());
  bool lmi_or_roaming = false;
  for (const auto& v : rep.violations) lmi_or_roaming |= v.constraint == "lmi" || v.constraint == "roaming";
  CHECK(lmi_or_roaming);
}

TEST_CASE("with one roaming antenna the determinant and LMI forms agree") {
  std::mt19937_64 rng(20);
  const SecureParams p = hand_params(2, 2, 4, 1);
  const ChannelSet ch = hand_channels(rng, p);
  const auto a = secure::solve_secure(ch, p);
  REQUIRE(a.status == conic::Status::Optimal);
  const double n0 = p.sigma_ant2 + p.sigma_s2;
  for (int m = 0; m < p.n_roaming; ++m)
    for (int k = 0; k < p.n_desired; ++k) {
      const CVec g = ch.g_list[m].col(0);
      const double sig = g.dot(a.w[k] * g).real(), q = g.dot(a.v * g).real() + n0;
      const double rate = metrics::eav_rate_upper(ch.g_list[m], a.w[k], a.v, p.sigma_ant2, p.sigma_s2);
      CHECK_THAT(rate, WithinRel(std::log2(1.0 + sig / q), 1e-12));
      // The LMI slack and the rate slack have the same sign.
      CHECK((sig <= (p.psi(m, k) - 1.0) * q) == (rate <= p.r_max(m, k)));
    }
}

TEST_CASE("eavesdropper aligned with a desired user makes the problem infeasible") {
  std::mt19937_64 rng(21);
  const SecureParams p = hand_params(1, 1, 3, 1);
  ChannelSet ch = hand_channels(rng, p);
  ch.g_list[0].col(0) = ch.h_list[0];
  const auto a = secure::solve_secure(ch, p);
  CHECK(a.status == conic::Status::Infeasible);
  CHECK_FALSE(a.certificate.empty());
}

TEST_CASE("single-user detection at roaming receivers only relaxes the problem") {
  for (int trial = 0; trial < 3; ++trial) {
    const SecureParams p = table_3_1();
    const ChannelSet ch = generate_secure_channels(p, 22, trial);
    secure::SecureOptions sud;
    sud.single_user_detection = true;
    const auto base = secure::solve_secure(ch, p);
    const auto a = secure::solve_secure(ch, p, sud);
    REQUIRE(base.status == conic::Status::Optimal);
    REQUIRE(a.status == conic::Status::Optimal);
    CHECK(a.p_tx <= base.p_tx * (1.0 + 1e-6));
    CHECK(secure::verify_secure(a, ch, p, true).ok());
    CHECK((secure::eavesdropper_interference(a, 0, true) - a.v - a.w[1] - a.w[2]).norm() <= 1e-12 * a.p_tx);
  }
}
