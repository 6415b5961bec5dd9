// SPDX-License-Identifier: Apache-2.0
#include "swipt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "swipt/rng.hpp"

namespace swipt {

NetworkTopology generate_topology(int num_bs, int num_users, double area_side,
                                  int antennas_per_bs, std::uint64_t seed) {
  if (num_bs < 1 || num_users < 1)
    throw std::invalid_argument("generate_topology: need at least one BS and one user");
  if (area_side <= 0.0)
    throw std::invalid_argument("generate_topology: area_side must be positive");
  if (antennas_per_bs < 1)
    throw std::invalid_argument("generate_topology: antennas_per_bs must be >= 1");

  Rng rng(seed);
  NetworkTopology topo;
  topo.antennas_per_bs = antennas_per_bs;
  topo.area_side = area_side;
  topo.bs_positions.reserve(num_bs);
  topo.user_positions.reserve(num_users);
  for (int l = 0; l < num_bs; ++l) {
    const double x = area_side * rng.uniform();
    const double y = area_side * rng.uniform();
    topo.bs_positions.emplace_back(x, y);
  }
  for (int k = 0; k < num_users; ++k) {
    const double x = area_side * rng.uniform();
    const double y = area_side * rng.uniform();
    topo.user_positions.emplace_back(x, y);
  }
  return topo;
}

double path_loss_db(double distance_m, const ChannelParams& params) {
  if (distance_m <= 0.0)
    throw std::invalid_argument("path_loss_db: distance must be positive");
  const double d_km = std::max(distance_m, kMinLinkDistanceM) / 1000.0;
  return params.pathloss_intercept_db +
         params.pathloss_slope_db_per_decade * std::log10(d_km);
}

double large_scale_gain(double distance_m, const ChannelParams& params,
                        double shadow_db) {
  const double gain_db =
      params.antenna_gain_db + shadow_db - path_loss_db(distance_m, params);
  return params.gain_scale * std::pow(10.0, gain_db / 10.0);
}

ChannelState sample_channels(const NetworkTopology& topology,
                             const ChannelParams& params, std::uint64_t seed) {
  if (topology.num_bs() < 1 || topology.num_users() < 1)
    throw std::invalid_argument("sample_channels: empty topology");
  if (params.noise_power <= 0.0)
    throw std::invalid_argument("sample_channels: noise_power must be positive");
  if (params.csi_error_variance < 0.0)
    throw std::invalid_argument("sample_channels: csi_error_variance must be >= 0");

  const int L = topology.num_bs();
  const int K = topology.num_users();
  const int nl = topology.antennas_per_bs;
  const int N = topology.total_antennas();

  Rng rng(seed);
  ChannelState state;
  state.noise_power = params.noise_power;
  state.h_est.resize(K, Eigen::VectorXcd::Zero(N));
  state.h_true.resize(K, Eigen::VectorXcd::Zero(N));
  state.error_cov.resize(
      K, params.csi_error_variance * Eigen::MatrixXcd::Identity(N, N));

  const double err_std = std::sqrt(params.csi_error_variance);
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) {
      const double d =
          (topology.user_positions[k] - topology.bs_positions[l]).norm();
      const double shadow = params.shadowing_std_db > 0.0
                                ? params.shadowing_std_db * rng.gaussian()
                                : 0.0;
      const double amp = std::sqrt(large_scale_gain(d, params, shadow));
      for (int a = 0; a < nl; ++a)
        state.h_est[k](l * nl + a) = amp * rng.cgaussian();
    }
    Eigen::VectorXcd err(N);
    for (int i = 0; i < N; ++i) err(i) = err_std * rng.cgaussian();
    state.h_true[k] = state.h_est[k] + err;
  }
  return state;
}

double mean_link_gain(const NetworkTopology& topology, const ChannelParams& params) {
  ChannelParams unscaled = params;
  unscaled.gain_scale = 1.0;
  double sum = 0.0;
  for (const auto& u : topology.user_positions)
    for (const auto& b : topology.bs_positions)
      sum += large_scale_gain((u - b).norm(), unscaled);
  return sum / (topology.num_users() * topology.num_bs());
}

namespace {

void write_matrix_rows(std::ostream& out, const char* block, int user,
                       const Eigen::MatrixXcd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out << block << ',' << user << ',' << r << ',' << c << ','
          << m(r, c).real() << ',' << m(r, c).imag() << '\n';
}

}  // namespace

void save_channels(const ChannelState& state, std::ostream& out) {
  out.precision(17);
  out << "block,user,row,col,re,im\n";
  out << "noise_power,0,0,0," << state.noise_power << ",0\n";
  for (int k = 0; k < state.num_users(); ++k) {
    write_matrix_rows(out, "h_true", k, state.h_true[k]);
    write_matrix_rows(out, "h_est", k, state.h_est[k]);
    write_matrix_rows(out, "error_cov", k, state.error_cov[k]);
  }
}

ChannelState load_channels(std::istream& in) {
  ChannelState state;
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& what) {
    throw std::runtime_error("load_channels: line " + std::to_string(lineno) +
                             ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "block,user,row,col,re,im") continue;
    std::istringstream ls(line);
    std::string block, tok;
    if (!std::getline(ls, block, ',')) fail("missing block tag");
    double fields[5];
    for (double& f : fields) {
      if (!std::getline(ls, tok, ',')) fail("expected 6 comma-separated fields");
      try {
        f = std::stod(tok);
      } catch (const std::exception&) {
        fail("non-numeric field '" + tok + "'");
      }
    }
    const int user = static_cast<int>(fields[0]);
    const int row = static_cast<int>(fields[1]);
    const int col = static_cast<int>(fields[2]);
    const std::complex<double> v(fields[3], fields[4]);
    auto ensure_user = [&](auto& vec, int k) {
      if (k < 0) fail("negative user index");
      if (static_cast<int>(vec.size()) <= k) vec.resize(k + 1);
    };
    if (block == "noise_power") {
      state.noise_power = v.real();
    } else if (block == "h_true" || block == "h_est") {
      auto& vec = block == "h_true" ? state.h_true : state.h_est;
      ensure_user(vec, user);
      if (vec[user].size() <= row) vec[user].conservativeResizeLike(
          Eigen::VectorXcd::Zero(row + 1));
      vec[user](row) = v;
    } else if (block == "error_cov") {
      ensure_user(state.error_cov, user);
      auto& m = state.error_cov[user];
      const int need = std::max(row, col) + 1;
      if (m.rows() < need) {
        Eigen::MatrixXcd grown = Eigen::MatrixXcd::Zero(need, need);
        grown.topLeftCorner(m.rows(), m.cols()) = m;
        m.swap(grown);
      }
      m(row, col) = v;
    } else {
      fail("unknown block tag '" + block + "'");
    }
  }
  if (state.h_true.size() != state.h_est.size() ||
      state.h_true.size() != state.error_cov.size())
    throw std::runtime_error("load_channels: inconsistent user counts across blocks");
  return state;
}

}  // namespace swipt
