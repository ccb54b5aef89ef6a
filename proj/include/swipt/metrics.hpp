// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "swipt/sysmodel.hpp"

namespace swipt::metrics {

struct MoopObjectives {
  double ir_ee = 0.0;      // bits/s/Hz per W
  double eh_ee = 0.0;
  double p_tx = 0.0;       // W
  double rate = 0.0;       // bits/s/Hz
  double harvested = 0.0;  // W
  double p_total = 0.0;    // W, including circuit power
};

struct SecureQoS {
  std::vector<double> sinr;
  std::vector<double> rate;
  Mat eav_rate_upper;  // M x K
  std::vector<double> secrecy_rate;
  std::vector<double> harvested_desired;
  std::vector<double> harvested_roaming;
};

double quad(const CVec& h, const CMat& w);

double rate_sep(const CVec& h, const CVec& w_i, double sigma2);
double harvested_sep(const CVec& g, const CVec& w_i, const CMat& w_e, double eta);
double total_power(const CVec& w_i, const CMat& w_e, const SystemParams& params);
MoopObjectives moop_objectives(const CVec& w_i, const CMat& w_e, const ChannelSet& ch, const SystemParams& params);

double sinr_k(int k, const std::vector<CVec>& h, const std::vector<CMat>& w, const CMat& v, double rho, double sigma_ant2,
              double sigma_s2);
// `v` is the interference covariance seen by the eavesdropper (artificial noise plus any
// co-channel signals it cannot cancel).
double eav_rate_upper(const CMat& g, const CMat& w_k, const CMat& v, double sigma_ant2, double sigma_s2);
double secrecy_rate(double rate, const std::vector<double>& eav_rates);
double harvested_desired(const CVec& h, const std::vector<CMat>& w, const CMat& v, double rho, double eta,
                         double sigma_ant2);
double harvested_roaming(const CMat& g, const std::vector<CMat>& w, const CMat& v, double rho, double eta,
                         double sigma_ant2);

// Roaming receivers harvest everything (rho = 0) when they do not eavesdrop.
SecureQoS secure_qos(const ChannelSet& ch, const std::vector<CMat>& w, const CMat& v, const std::vector<double>& rho,
                     const SecureParams& params, bool single_user_detection = false);

}  // namespace swipt::metrics
