// SPDX-License-Identifier: Apache-2.0
#include "swipt/sysmodel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace swipt {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Rejects the measure-zero all-zero draw.
CMat draw_link(std::mt19937_64& rng, int rows, int cols, const Propagation& prop, double d) {
  const double gain = path_loss_gain(d, prop);
  for (;;) {
    CMat m = draw_rician(rng, rows, cols, prop.rician_factor_db, gain);
    if (m.norm() > 0.0) return m;
  }
}

}  // namespace

void SystemParams::validate() const {
  if (n_tx_antennas < 1) throw std::invalid_argument("n_tx_antennas must be >= 1");
  if (!(pa_efficiency > 0.0 && pa_efficiency <= 1.0)) throw std::invalid_argument("pa_efficiency must lie in (0,1]");
  if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in [0,1]");
  if (!(p_max > 0.0)) throw std::invalid_argument("p_max must be positive");
  if (!(noise_power > 0.0)) throw std::invalid_argument("noise_power must be positive");
  if (!(prop.d_ref < prop.d_max)) throw std::invalid_argument("d_ref must be below d_max");
}

double SecureParams::psi(int m, int k) const { return std::exp2(r_max(m, k)); }

void SecureParams::validate() const {
  if (n_rx_antennas < 1 || n_tx_antennas <= n_rx_antennas)
    throw std::invalid_argument("require N_T > N_R >= 1");
  if (n_desired < 1 || n_roaming < 0) throw std::invalid_argument("bad receiver counts");
  if (static_cast<int>(gamma_req.size()) != n_desired || static_cast<int>(p_req1.size()) != n_desired)
    throw std::invalid_argument("per-user targets must have n_desired entries");
  if (static_cast<int>(p_req2.size()) != n_roaming) throw std::invalid_argument("p_req2 must have n_roaming entries");
  if (r_max.rows() != n_roaming || r_max.cols() != n_desired) throw std::invalid_argument("r_max must be M x K");
  for (double g : gamma_req)
    if (!(g > 0.0)) throw std::invalid_argument("gamma_req must be positive");
  for (double p : p_req1)
    if (!(p >= 0.0)) throw std::invalid_argument("p_req1 must be nonnegative");
  for (double p : p_req2)
    if (!(p >= 0.0)) throw std::invalid_argument("p_req2 must be nonnegative");
  if (r_max.size() > 0 && !(r_max.minCoeff() > 0.0)) throw std::invalid_argument("r_max must be positive (psi > 1)");
  if (!(sigma_s2 > 0.0) || !(sigma_ant2 >= 0.0)) throw std::invalid_argument("bad noise powers");
  if (!(eta > 0.0 && eta <= 1.0)) throw std::invalid_argument("eta must lie in (0,1]");
  if (!(prop.d_ref <= prop.d_max)) throw std::invalid_argument("d_ref must not exceed d_max");
}

SystemParams table_2_1(int n_tx) {
  SystemParams p;
  p.n_tx_antennas = n_tx;
  p.noise_power = dbm_to_watt(-47.0);
  p.prop.d_ref = 1.0;
  p.prop.d_max = 10.0;
  return p;
}

SecureParams table_3_1(int n_tx, double gamma_req_db) {
  SecureParams p;
  p.n_tx_antennas = n_tx;
  p.sigma_ant2 = dbm_to_watt(-124.0);
  p.sigma_s2 = dbm_to_watt(-23.0);
  p.gamma_req.assign(p.n_desired, db_to_linear(gamma_req_db));
  p.r_max = Mat::Constant(p.n_roaming, p.n_desired, 1.0);
  p.p_req1.assign(p.n_desired, dbm_to_watt(0.0));
  p.p_req2.assign(p.n_roaming, dbm_to_watt(0.0));
  p.prop.d_ref = 2.0;
  p.prop.d_max = 50.0;
  return p;
}

ChannelSet ChannelSet::truncated(int n) const {
  ChannelSet out = *this;
  if (h.size() > 0) out.h = h.head(n);
  if (g.size() > 0) out.g = g.head(n);
  for (auto& v : out.h_list) v = CVec(v.head(n));
  for (auto& m : out.g_list) m = CMat(m.topRows(n));
  return out;
}

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double x) { return 10.0 * std::log10(x); }

double path_loss_gain(double d, const Propagation& prop) {
  if (!(d >= prop.d_ref)) throw std::out_of_range("distance below reference distance");
  auto fspl_db = [&](double dist) {
    return 20.0 * std::log10(4.0 * std::numbers::pi * dist * prop.carrier_freq / kSpeedOfLight);
  };
  double loss = d <= prop.breakpoint ? fspl_db(d) : fspl_db(prop.breakpoint) + 35.0 * std::log10(d / prop.breakpoint);
  return std::pow(10.0, (prop.antenna_gain_dbi - loss) / 10.0);
}

CMat draw_rician(std::mt19937_64& rng, int rows, int cols, double rician_factor_db, double link_gain) {
  const double kappa = db_to_linear(rician_factor_db);
  const double los = std::sqrt(kappa / (kappa + 1.0));
  const double nlos = std::sqrt(1.0 / (kappa + 1.0));
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double amp = std::sqrt(link_gain);
  CMat out(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = amp * (cdouble(los, 0.0) + nlos * cdouble(re, im));
    }
  return out;
}

std::vector<double> place_receivers(std::mt19937_64& rng, int n, double d_ref, double d_max) {
  std::vector<double> d;
  d.reserve(std::max(n, 0));
  if (d_ref == d_max) {
    d.assign(std::max(n, 0), d_ref);
    return d;
  }
  std::uniform_real_distribution<double> u(d_ref, d_max);
  for (int i = 0; i < n; ++i) d.push_back(u(rng));
  return d;
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  const std::uint64_t a = splitmix64(seed);
  const std::uint64_t b = splitmix64(a ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
  const std::uint64_t c = splitmix64(b ^ splitmix64(stream + 0x8cb92ba72f3d8dd7ULL));
  std::seed_seq seq{static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32),
                    static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
  return std::mt19937_64(seq);
}

ChannelSet generate_sep_channels(const SystemParams& params, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_engine(seed, trial, 2);
  ChannelSet cs;
  cs.distances = place_receivers(rng, 2, params.prop.d_ref, params.prop.d_max);
  cs.h = draw_link(rng, params.n_tx_antennas, 1, params.prop, cs.distances[0]).col(0);
  cs.g = draw_link(rng, params.n_tx_antennas, 1, params.prop, cs.distances[1]).col(0);
  return cs;
}

ChannelSet generate_secure_channels(const SecureParams& params, std::uint64_t seed, std::uint64_t trial) {
  auto rng = trial_engine(seed, trial, 3);
  ChannelSet cs;
  const int k = params.n_desired, m = params.n_roaming;
  cs.distances = place_receivers(rng, k + m, params.prop.d_ref, params.prop.d_max);
  for (int i = 0; i < k; ++i)
    cs.h_list.push_back(draw_link(rng, params.n_tx_antennas, 1, params.prop, cs.distances[i]).col(0));
  for (int i = 0; i < m; ++i)
    cs.g_list.push_back(draw_link(rng, params.n_tx_antennas, params.n_rx_antennas, params.prop, cs.distances[k + i]));
  return cs;
}

}  // namespace swipt
