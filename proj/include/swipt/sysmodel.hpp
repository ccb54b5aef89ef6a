// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace swipt {

using cdouble = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kSpeedOfLight = 299792458.0;

// Propagation constants shared by both system models.
struct Propagation {
  double carrier_freq = 470e6;     // Hz
  double antenna_gain_dbi = 10.0;
  double rician_factor_db = 3.0;
  double breakpoint = 5.0;         // m
  double d_ref = 1.0;              // m
  double d_max = 10.0;             // m
};

struct SystemParams {
  int n_tx_antennas = 8;
  double bandwidth = 200e3;        // Hz, informational only
  double p_ant = 0.075;            // W per antenna
  double p_c = 1.0;                // W
  double pa_efficiency = 0.4;      // xi
  double p_max = 1.0;              // W
  double eta = 0.8;
  double noise_power = 0.0;        // W
  Propagation prop;

  double circuit_power() const { return n_tx_antennas * p_ant + p_c; }
  void validate() const;
};

struct SecureParams {
  int n_tx_antennas = 8;
  int n_rx_antennas = 2;
  int n_desired = 3;
  int n_roaming = 2;
  double sigma_ant2 = 0.0;         // W
  double sigma_s2 = 0.0;           // W
  std::vector<double> gamma_req;   // linear, per desired user
  Mat r_max;                       // bits/s/Hz, n_roaming x n_desired
  std::vector<double> p_req1;      // W, per desired user
  std::vector<double> p_req2;      // W, per roaming user
  double eta = 0.5;
  Propagation prop;

  double psi(int m, int k) const;
  void validate() const;
};

SystemParams table_2_1(int n_tx = 8);
// gamma_req_db applies to every desired user.
SecureParams table_3_1(int n_tx = 8, double gamma_req_db = 10.0);

struct ChannelSet {
  CVec h;                          // information receiver
  CVec g;                          // energy harvester
  std::vector<CVec> h_list;        // desired receivers
  std::vector<CMat> g_list;        // roaming receivers, N_T x N_R
  std::vector<double> distances;

  // Restricts every channel to its first n transmit antennas.
  ChannelSet truncated(int n) const;
};

double dbm_to_watt(double dbm);
double db_to_linear(double db);
double linear_to_db(double x);

double path_loss_gain(double d, const Propagation& prop);

CMat draw_rician(std::mt19937_64& rng, int rows, int cols, double rician_factor_db, double link_gain);

std::vector<double> place_receivers(std::mt19937_64& rng, int n, double d_ref, double d_max);

// Independent stream for (seed, trial, stream) so trials can run in any order.
std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0);

ChannelSet generate_sep_channels(const SystemParams& params, std::uint64_t seed, std::uint64_t trial);
ChannelSet generate_secure_channels(const SecureParams& params, std::uint64_t seed, std::uint64_t trial);

}  // namespace swipt
