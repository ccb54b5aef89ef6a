// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "swipt/conic.hpp"
#include "swipt/metrics.hpp"

namespace swipt::moop {

struct WeightVector {
  double w1 = 0.0, w2 = 0.0, w3 = 0.0;
  void validate() const;
};

struct LiftedVars {
  CMat w_i, w_e;
  double theta = 0.0;
};

// Per-realization optima used to normalize the objectives. The zero anchors are
// F1 = F2 = 0 and F3 = -p_max.
struct Anchors {
  double phi_ir_star = 0.0;
  double phi_eh_star = 0.0;
  double p_max = 0.0;
};

struct SearchOptions {
  int grid_points = 24;
  double rel_tol = 1e-5;  // on the rate parameter
  conic::Options solver{.gap_tol = 1e-10, .feas_tol = 1e-10};
};

struct MoopAllocation {
  CVec w_i;
  CMat w_e;
  double theta = 0.0;
  double tau = 0.0;
  metrics::MoopObjectives objectives;
  WeightVector weights;

  conic::Status status = conic::Status::Optimal;
  LiftedVars lifted;           // lift of the returned point
  double raw_we_norm = 0.0;    // ||W_E||_F of the solver output before folding into W_I
  double rank_ratio = 0.0;     // lambda2 / lambda1 of the information matrix used for extraction
  double rate_param = 0.0;     // s (lifted) or r (throughput baseline) at the optimum
  double budget_residual = 0.0;
  int sdp_solves = 0;
};

struct RankOne {
  CVec v;
  double ratio = 0.0;
};

MoopAllocation solve_power_min(const SystemParams& params);
MoopAllocation solve_ehee_max(const ChannelSet& ch, const SystemParams& params);
MoopAllocation solve_ehee_max_sdp(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts = {});
MoopAllocation solve_iree_max(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts = {});
Anchors compute_anchors(const ChannelSet& ch, const SystemParams& params, const SearchOptions& opts = {});

LiftedVars lift(const CVec& w_i, const CMat& w_e, const SystemParams& params);
std::pair<CVec, CMat> recover(const LiftedVars& lifted);
double budget_identity(const LiftedVars& lifted, const SystemParams& params);

double normalize(double f, double f_star, double f_zero);

// Optimal value of min over (lifted vars, tau) of tau at a fixed rate parameter s; exposed for tests.
double minmax_value_at(double s, const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                       const Anchors& anchors, const conic::Options& opts = {});
MoopAllocation solve_weighted_minmax(const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                                     const Anchors& anchors, const SearchOptions& opts = {});

RankOne rank_one_extract(const CMat& w);

struct KktReport {
  double span_residual = 0.0;  // part of w_I outside span{h, g}, relative
  double sin_angle_h = 0.0;
  double sin_angle_g = 0.0;
};
KktReport kkt_structure_check(const MoopAllocation& a, const ChannelSet& ch);

enum class Sense { Maximize, Minimize };
// Indices of points not dominated: dominated means another point is at least as good in
// every coordinate and better by more than tol in one.
std::vector<size_t> pareto_filter(const std::vector<std::vector<double>>& points, const std::vector<Sense>& senses,
                                  double tol = 0.0);

std::vector<WeightVector> sweep_weights(double step);
// Weights with w_{zero_axis} = 0 (axis in 1..3), ordered by the first free weight increasing.
std::vector<WeightVector> pairwise_weights(double step, int zero_axis);

struct ThroughputAnchors {
  double rate_star = 0.0;
  double harvest_star = 0.0;
};
ThroughputAnchors throughput_anchors(const ChannelSet& ch, const SystemParams& params);
MoopAllocation solve_throughput_minmax(const WeightVector& w, const ChannelSet& ch, const SystemParams& params,
                                       const SearchOptions& opts = {});

}  // namespace swipt::moop
