// SPDX-License-Identifier: Apache-2.0
#include "swipt/wmmse.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace swipt {

double sinr(const Eigen::VectorXcd& h, std::span<const Eigen::VectorXcd> v_info,
            int k, double noise_power) {
  if (k < 0 || k >= static_cast<int>(v_info.size()))
    throw std::invalid_argument("sinr: user index out of range");
  double signal = 0.0;
  double interference = 0.0;
  for (int j = 0; j < static_cast<int>(v_info.size()); ++j) {
    const double p = std::norm(h.dot(v_info[j]));
    if (j == k)
      signal = p;
    else
      interference += p;
  }
  return signal / (interference + noise_power);
}

double rate(double sinr_value, double tau) {
  if (sinr_value < 0.0) throw std::invalid_argument("rate: sinr must be >= 0");
  if (tau <= 0.0 || tau >= 1.0)
    throw std::invalid_argument("rate: tau must be in (0, 1)");
  return (1.0 - tau) * std::log1p(sinr_value);
}

double phi(std::span<const Eigen::VectorXcd> v_info,
           const Eigen::MatrixXcd& error_cov) {
  double sum = 0.0;
  for (const auto& v : v_info) sum += std::real(v.dot(error_cov * v));
  return sum;
}

namespace {

double received_power(const Eigen::VectorXcd& h_est,
                      std::span<const Eigen::VectorXcd> v_info, double phi_k,
                      double noise_power) {
  double p = noise_power + phi_k;
  for (const auto& v : v_info) p += std::norm(h_est.dot(v));
  return p;
}

}  // namespace

std::complex<double> mmse_receiver(const Eigen::VectorXcd& h_est,
                                   std::span<const Eigen::VectorXcd> v_info,
                                   double phi_k, double noise_power, int k) {
  const double denom = received_power(h_est, v_info, phi_k, noise_power);
  return h_est.dot(v_info[k]) / denom;
}

double avg_mse(std::complex<double> w, const Eigen::VectorXcd& h_est,
               std::span<const Eigen::VectorXcd> v_info, double phi_k,
               double noise_power, int k) {
  const double p = received_power(h_est, v_info, phi_k, noise_power);
  return 1.0 + std::norm(w) * p -
         2.0 * std::real(std::conj(w) * h_est.dot(v_info[k]));
}

double weight(double mse) {
  if (mse <= 0.0) throw std::invalid_argument("weight: mse must be positive");
  return 1.0 / mse;
}

double SubproblemObjective::value(std::span<const Eigen::VectorXcd> v_info) const {
  double v = constant;
  for (size_t j = 0; j < v_info.size(); ++j)
    v += std::real(v_info[j].dot(quadratic_block * v_info[j]));
  for (size_t k = 0; k < linear.size(); ++k)
    v -= 2.0 * std::real(linear[k].dot(v_info[k]));
  return v;
}

double SubproblemObjective::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(quadratic_block,
                                                      Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

SubproblemObjective subproblem_objective(
    std::span<const double> weights,
    std::span<const std::complex<double>> receivers,
    std::span<const Eigen::VectorXcd> h_est,
    std::span<const Eigen::MatrixXcd> error_cov, double noise_power) {
  const size_t K = weights.size();
  if (receivers.size() != K || h_est.size() != K || error_cov.size() != K)
    throw std::invalid_argument("subproblem_objective: size mismatch");
  const Eigen::Index n = h_est.empty() ? 0 : h_est[0].size();

  SubproblemObjective obj;
  obj.quadratic_block = Eigen::MatrixXcd::Zero(n, n);
  obj.linear.resize(K, Eigen::VectorXcd::Zero(n));
  for (size_t k = 0; k < K; ++k) {
    const double scale = weights[k] * std::norm(receivers[k]);
    obj.quadratic_block.noalias() +=
        scale * (h_est[k] * h_est[k].adjoint() + error_cov[k]);
    obj.linear[k] = weights[k] * receivers[k] * h_est[k];
    obj.constant += weights[k] * (1.0 + std::norm(receivers[k]) * noise_power);
  }
  obj.quadratic_block = 0.5 * (obj.quadratic_block +
                               obj.quadratic_block.adjoint().eval());
  return obj;
}

WmmseState update_wmmse_state(std::span<const Eigen::VectorXcd> v_info,
                              std::span<const Eigen::VectorXcd> h_est,
                              std::span<const Eigen::MatrixXcd> error_cov,
                              double noise_power) {
  const size_t K = h_est.size();
  WmmseState state;
  state.receivers.resize(K);
  state.mse.resize(K);
  state.weights.resize(K);
  state.phi.resize(K);
  for (size_t k = 0; k < K; ++k) {
    state.phi[k] = phi(v_info, error_cov[k]);
    state.receivers[k] = mmse_receiver(h_est[k], v_info, state.phi[k],
                                       noise_power, static_cast<int>(k));
    state.mse[k] = avg_mse(state.receivers[k], h_est[k], v_info, state.phi[k],
                           noise_power, static_cast<int>(k));
    state.weights[k] = weight(state.mse[k]);
  }
  return state;
}

double weighted_mse_objective(const WmmseState& state) {
  double obj = 0.0;
  for (size_t k = 0; k < state.mse.size(); ++k)
    obj += state.weights[k] * state.mse[k] - std::log(state.weights[k]);
  return obj;
}

double lower_bound_sum_rate(const WmmseState& state, double tau) {
  double sum = 0.0;
  for (const double w : state.weights) sum += std::log(w);
  return (1.0 - tau) * sum;
}

}  // namespace swipt
