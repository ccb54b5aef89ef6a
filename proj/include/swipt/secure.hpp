// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "swipt/conic.hpp"
#include "swipt/metrics.hpp"

namespace swipt::secure {

inline constexpr double kRhoFloor = 1e-6;

struct SecureOptions {
  conic::Options solver{.gap_tol = 1e-10, .feas_tol = 1e-10, .reduced_tol = 1e-7};
  // Roaming receivers decode one user at a time and see the other users' signals as noise.
  bool single_user_detection = false;
  double verify_tol = 1e-6;
  // Relative tightening of every QoS target inside the SDP so that solver-accuracy
  // residuals stay on the feasible side when checked from raw channels.
  double margin = 1e-5;
};

// Beam directions held fixed (one unit vector per user) and/or fixed splitting ratios.
struct BuildOptions {
  bool single_user_detection = false;
  std::vector<CVec> directions;
  std::vector<double> fixed_rho;  // empty, or one entry per user
  double margin = 0.0;
  double power_unit = 0.0;  // W per matrix unit; 0 picks a single-user estimate
};

struct SecureLayout {
  int sinr = 0;
  int lmi_blocks = 0;
  int harvest_desired = 0;
  int harvest_roaming = 0;
  int hyperbolic_blocks = 0;
  int box = 0;
  int signal_blocks = 0;  // signal plus artificial-noise matrices
};

struct SecureSdp {
  conic::Problem problem;
  double power_unit = 1.0;  // W per unit of the matrix variables
  std::vector<int> w;       // signal block per user, -1 with fixed directions
  std::vector<int> q;       // power scalar per user with fixed directions
  std::vector<double> q_unit;  // power units per q, relative to power_unit
  std::vector<CVec> directions;
  int v = -1;
  std::vector<int> t_block, u_block;  // [[t,1],[1,rho]] and [[u,1],[1,1-rho]]; -1 if absent
  std::vector<double> fixed_rho;
  std::vector<int> sinr_row, harvest_row, roam_row;
  double row_unit = 1.0;  // the power rows are divided by this
  std::vector<std::string> row_names;
  SecureLayout layout;
};

struct SecureDuals {
  std::vector<double> alpha;  // SINR rows
  std::vector<double> beta;   // desired harvesting rows
  std::vector<double> nu;     // roaming harvesting rows
};

struct SecureAllocation {
  std::vector<CMat> w;
  CMat v;
  std::vector<double> rho;
  std::vector<CVec> beams;  // W_k = beams[k] beams[k]^H when rank one
  double p_tx = 0.0;
  double signal_power = 0.0;
  double an_power = 0.0;
  double relaxed_objective = 0.0;
  metrics::SecureQoS qos;
  SecureDuals duals;
  std::vector<double> rank_ratio;
  conic::Status status = conic::Status::NumericalLimit;
  std::vector<std::string> certificate;  // rows carrying an infeasibility certificate
  bool fallback = false;
  int sdp_solves = 0;
};

enum class Scheme { Optimal, ZeroForcing, ZeroForcingHalfSplit };

struct Violation {
  std::string constraint;
  int index = -1;
  double excess = 0.0;  // relative
};

struct SecureReport {
  std::vector<Violation> violations;
  double max_eav_excess = 0.0;      // max over (m,k) of exact eavesdropper rate minus R_max
  double min_secrecy_margin = 0.0;  // min over k of secrecy rate minus the floor
  double max_lmi_violation = 0.0;
  double max_rank_ratio = 0.0;
  bool ok() const { return violations.empty(); }
};

SecureSdp build_secure_sdp(const ChannelSet& ch, const SecureParams& params, const BuildOptions& opts = {});

SecureAllocation solve_secure(const ChannelSet& ch, const SecureParams& params, const SecureOptions& opts = {});

// Relaxed solution of the full problem, before any rank reduction.
SecureAllocation solve_secure_relaxed(const ChannelSet& ch, const SecureParams& params,
                                      const SecureOptions& opts = {});

SecureAllocation rank_one_reconstruct(const SecureAllocation& relaxed, const ChannelSet& ch,
                                      const SecureParams& params, const SecureOptions& opts = {});

double optimal_rho_from_duals(double alpha, double beta, double sigma_s2, double eta, double p_req1);

// Unit zero-forcing directions, each in the null space of the other users' channels.
std::vector<CVec> zf_directions(const ChannelSet& ch);

SecureAllocation baseline_zf(const ChannelSet& ch, const SecureParams& params, Scheme scheme,
                             const SecureOptions& opts = {});

SecureAllocation run_scheme(const ChannelSet& ch, const SecureParams& params, Scheme scheme,
                            const SecureOptions& opts = {});

const char* to_string(Scheme s);

SecureReport verify_secure(const SecureAllocation& a, const ChannelSet& ch, const SecureParams& params,
                           bool single_user_detection = false, double tol = 1e-6);

// Interference covariance at a roaming receiver when user k is decoded.
CMat eavesdropper_interference(const SecureAllocation& a, int k, bool single_user_detection);

}  // namespace swipt::secure
