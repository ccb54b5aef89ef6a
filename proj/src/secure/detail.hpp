// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "swipt/secure.hpp"

namespace swipt::secure::detail {

void check_inputs(const ChannelSet& ch, const SecureParams& params);

SecureAllocation solve_sdp(const SecureSdp& sdp, const ChannelSet& ch, const SecureParams& params,
                           const SecureOptions& opts);

// Builds and solves, retrying once in rescaled units after a stall.
SecureAllocation solve(const ChannelSet& ch, const SecureParams& params, BuildOptions b, const SecureOptions& opts);

// Fills powers, rank ratios, beams and QoS from w, v and rho.
void finish(SecureAllocation& a, const ChannelSet& ch, const SecureParams& params, bool single_user_detection);

}  // namespace swipt::secure::detail
