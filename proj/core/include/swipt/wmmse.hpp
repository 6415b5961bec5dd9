// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <complex>
#include <span>
#include <vector>

namespace swipt {

/// Transmit-side design variables: one information beamforming vector and
/// one (relaxed) energy covariance matrix per user, plus the time-switching
/// ratio. v_info[k] and V_energy[k] stack all BS antennas; per-BS blocks are
/// the antennas_per_bs-sized diagonal slices.
struct BeamformerSet {
  std::vector<Eigen::VectorXcd> v_info;
  std::vector<Eigen::MatrixXcd> V_energy;
  double tau = 0.5;

  int num_users() const { return static_cast<int>(v_info.size()); }
  int dim() const { return v_info.empty() ? 0 : static_cast<int>(v_info[0].size()); }
};

/// Per-user scalars of one block-coordinate-descent sweep. Users have a
/// single antenna, so receiver, MSE and weight are scalars and the
/// matrix-weighted MMSE algebra collapses: weight = 1 / mse, and
/// -ln(mse at the MMSE receiver) = ln(1 + SINR) with the CSI-error power
/// phi added to the noise.
struct WmmseState {
  std::vector<std::complex<double>> receivers;  // w_k
  std::vector<double> mse;                      // averaged MSE
  std::vector<double> weights;                  // 1 / mse
  std::vector<double> phi;                      // sum_j v_j^H eps_k v_j
};

/// SINR of user k under channel h:
/// |h^H v_k|^2 / (sum_{j != k} |h^H v_j|^2 + noise_power).
double sinr(const Eigen::VectorXcd& h, std::span<const Eigen::VectorXcd> v_info,
            int k, double noise_power);

/// Time-switched achievable rate (nats): (1 - tau) * ln(1 + sinr).
double rate(double sinr_value, double tau);

/// Residual interference power caused by the CSI error:
/// sum_j v_j^H error_cov v_j. For error_cov = eps * I this is
/// eps * sum_j ||v_j||^2, the scalar-covariance expression.
double phi(std::span<const Eigen::VectorXcd> v_info,
           const Eigen::MatrixXcd& error_cov);

/// MMSE receive scalar for user k:
/// (h_est^H v_k) / (sum_j |h_est^H v_j|^2 + noise_power + phi_k).
std::complex<double> mmse_receiver(const Eigen::VectorXcd& h_est,
                                   std::span<const Eigen::VectorXcd> v_info,
                                   double phi_k, double noise_power, int k);

/// CSI-error-averaged MSE of user k at receive scalar w:
/// 1 + |w|^2 (sum_j |h_est^H v_j|^2 + noise_power + phi_k)
///   - 2 Re{conj(w) h_est^H v_k}.
double avg_mse(std::complex<double> w, const Eigen::VectorXcd& h_est,
               std::span<const Eigen::VectorXcd> v_info, double phi_k,
               double noise_power, int k);

/// MSE weight: 1 / mse. Rejects non-positive MSE.
double weight(double mse);

/// Convex quadratic minimized in the beamformer step, as explicit
/// coefficients over the stacked information beamformers:
///
///   sum_j v_j^H Q v_j - 2 Re{ sum_k b_k^H v_k } + constant,
///
/// with Q = sum_k weight_k |w_k|^2 (h_est_k h_est_k^H + error_cov_k)
/// (one PSD block shared by every v_j; the error term couples all users)
/// and b_k = weight_k w_k h_est_k. The constant collects the weighted
/// "+1" and noise terms dropped from the weighted-MSE objective.
struct SubproblemObjective {
  Eigen::MatrixXcd quadratic_block;          // Q, PSD
  std::vector<Eigen::VectorXcd> linear;      // b_k
  double constant = 0.0;

  double value(std::span<const Eigen::VectorXcd> v_info) const;
  /// Smallest eigenvalue of Q; >= -tol certifies convexity.
  double min_eigenvalue() const;
};

SubproblemObjective subproblem_objective(
    std::span<const double> weights,
    std::span<const std::complex<double>> receivers,
    std::span<const Eigen::VectorXcd> h_est,
    std::span<const Eigen::MatrixXcd> error_cov, double noise_power);

/// One full receiver/MSE/weight update at fixed beamformers.
WmmseState update_wmmse_state(std::span<const Eigen::VectorXcd> v_info,
                              std::span<const Eigen::VectorXcd> h_est,
                              std::span<const Eigen::MatrixXcd> error_cov,
                              double noise_power);

/// Weighted-MSE objective sum_k (weight_k * mse_k - ln(weight_k)) whose
/// descent the BCD sweep is tested against. At the per-iteration optimum
/// every summand equals 1 - ln(weight_k).
double weighted_mse_objective(const WmmseState& state);

/// Lower-bound sum rate (nats): (1 - tau) * sum_k ln(weight_k) at the MMSE
/// point, i.e. the rate the robust design certifies.
double lower_bound_sum_rate(const WmmseState& state, double tau);

}  // namespace swipt
