// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace swipt {

/// Multi-cell MISO downlink layout: L base stations with antennas_per_bs
/// transmit antennas each and K single-antenna users, dropped uniformly
/// on a square (a homogeneous PPP conditioned on the counts).
struct NetworkTopology {
  std::vector<Eigen::Vector2d> bs_positions;
  std::vector<Eigen::Vector2d> user_positions;
  int antennas_per_bs = 1;
  double area_side = 0.0;

  int num_bs() const { return static_cast<int>(bs_positions.size()); }
  int num_users() const { return static_cast<int>(user_positions.size()); }
  int total_antennas() const { return num_bs() * antennas_per_bs; }
};

/// Large-scale / small-scale channel parameters. Defaults follow the
/// usual cellular evaluation assumptions: PL(d) = 128.1 + 37.6 log10(d_km),
/// 9 dBi antenna gain, 6 dB log-normal shadowing, unit-variance Rayleigh
/// fading, noise power 0.01 W.
struct ChannelParams {
  double pathloss_intercept_db = 128.1;
  double pathloss_slope_db_per_decade = 37.6;
  double antenna_gain_db = 9.0;
  double shadowing_std_db = 6.0;
  double noise_power = 0.01;        // receiver noise sigma_k^2 [W]
  double csi_error_variance = 0.01; // scalar CSI error covariance scale
  double gain_scale = 1.0;          // extra linear power scale on the link gain
};

/// Links shorter than this are treated as 10 m; the log-distance path-loss
/// law is singular at d -> 0 and the layout model can place a user
/// arbitrarily close to a BS.
inline constexpr double kMinLinkDistanceM = 10.0;

/// One channel realization for all K users. Channels are stacked per user
/// over all BS antennas (length N = L * antennas_per_bs). The estimate is
/// what the transmitters know; the truth is estimate + error, and the error
/// is CN(0, error_cov[k]).
struct ChannelState {
  std::vector<Eigen::VectorXcd> h_true;
  std::vector<Eigen::VectorXcd> h_est;
  std::vector<Eigen::MatrixXcd> error_cov;
  double noise_power = 0.0;

  int num_users() const { return static_cast<int>(h_true.size()); }
  int dim() const { return h_true.empty() ? 0 : static_cast<int>(h_true[0].size()); }
};

/// Drops L BS and K user positions independently and uniformly on
/// [0, area_side]^2. Deterministic given the seed (BS points first,
/// then users, x before y).
NetworkTopology generate_topology(int num_bs, int num_users, double area_side,
                                  int antennas_per_bs, std::uint64_t seed);

/// Path loss in dB at link distance d (meters, clamped to kMinLinkDistanceM).
double path_loss_db(double distance_m, const ChannelParams& params);

/// Linear power gain of a link: antenna gain + shadowing - path loss, all in
/// dB, then 10^(dB/10), times params.gain_scale. shadow_db is the sampled
/// log-normal shadowing term (0 disables shadowing).
double large_scale_gain(double distance_m, const ChannelParams& params,
                        double shadow_db = 0.0);

/// Samples one channel realization. Per user k and BS l the estimate block
/// is sqrt(gain_kl) * g with g ~ CN(0, I); the CSI error is
/// CN(0, csi_error_variance * I) and the true channel is estimate + error.
/// Shadowing (when shadowing_std_db > 0) is drawn once per link and frozen.
/// Deterministic given the seed.
ChannelState sample_channels(const NetworkTopology& topology,
                             const ChannelParams& params, std::uint64_t seed);

/// Mean linear link gain over all (user, BS) pairs, shadowing excluded.
/// Experiments use 1/mean_link_gain as gain_scale to work in normalized
/// channel units.
double mean_link_gain(const NetworkTopology& topology, const ChannelParams& params);

/// Plain-text fixture format: one CSV row per matrix entry,
/// "block,user,row,col,re,im" with blocks h_true / h_est / error_cov,
/// plus a "noise_power" row. Readable by load_channels.
void save_channels(const ChannelState& state, std::ostream& out);
ChannelState load_channels(std::istream& in);

}  // namespace swipt
