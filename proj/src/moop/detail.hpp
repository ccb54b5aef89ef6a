// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "swipt/moop.hpp"

namespace swipt::moop::detail {

struct LiftedSdp {
  conic::Problem problem;
  int wi = -1, we = -1;
  int theta = -1;        // scalar index, or -1 when theta lives in theta_block
  int theta_block = -1;  // 2x2 block [[theta, 1], [1, *]]
  int tau = -1;

  conic::Functional& add_theta(conic::Functional& f, double c) const;
  double theta_value(const conic::Solution& s) const;
};

// Blocks for the lifted information/energy matrices, theta, and the power budget rows.
// With theta_in_block, theta is the corner of a 2x2 block whose other diagonal entry
// bounds 1/theta from above.
LiftedSdp lifted_base(const ChannelSet& ch, const SystemParams& params, bool theta_in_block = false);
void add_rate_constraint(LiftedSdp& sdp, const ChannelSet& ch, const SystemParams& params, double s);

// Grid followed by golden-section refinement around the best grid point; returns the best
// argument seen. f returns +inf on failure.
double grid_golden(const std::vector<double>& grid, double rel_tol, const std::function<double(double)>& f);

// Rate parameters for beams on h carrying a log-spaced range of powers up to
// (1 - backoff) p_max.
std::vector<double> rate_grid(const ChannelSet& ch, const SystemParams& params, int points, double backoff = 1e-6);

CMat block_complex(const conic::Solution& s, int block);

// Fills beams and objectives from lifted matrices; merge folds W_E into W_I first.
void finish_lifted(MoopAllocation& a, const LiftedVars& lv, const ChannelSet& ch, const SystemParams& params);

double sin_angle(const CVec& a, const CVec& b);

}  // namespace swipt::moop::detail
