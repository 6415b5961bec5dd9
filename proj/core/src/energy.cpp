// SPDX-License-Identifier: Apache-2.0
#include "swipt/energy.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "swipt/rng.hpp"

namespace swipt {

EhRequirement EhRequirement::make(double e_min, double eta, double theta) {
  if (e_min < 0.0) throw std::invalid_argument("EhRequirement: e_min must be >= 0");
  if (eta <= 0.0 || eta > 1.0)
    throw std::invalid_argument("EhRequirement: eta must be in (0, 1]");
  if (theta <= 0.0 || theta > 1.0)
    throw std::invalid_argument("EhRequirement: theta must be in (0, 1]");
  EhRequirement r;
  r.e_min = e_min;
  r.eta = eta;
  r.theta = theta;
  r.delta = -std::log(theta);
  return r;
}

double effective_delta(EnergyConstraintMode mode, const EhRequirement& req) {
  switch (mode) {
    case EnergyConstraintMode::Chance:
      return req.delta;
    case EnergyConstraintMode::StrictMargin:
      return kStrictMarginDelta;
    case EnergyConstraintMode::EstimateAsTruth:
      return 0.0;
  }
  throw std::logic_error("effective_delta: bad mode");
}

double harvested_energy(const Eigen::VectorXcd& h,
                        std::span<const Eigen::MatrixXcd> v_energy, double tau,
                        double eta, double noise_power) {
  if (tau <= 0.0 || tau >= 1.0)
    throw std::invalid_argument("harvested_energy: tau must be in (0, 1)");
  double received = noise_power;
  for (const auto& v : v_energy) received += std::real(h.dot(v * h));
  return tau * eta * received;
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(m);
  if (eig.info() != Eigen::Success)
    throw std::runtime_error("psd_sqrt: eigendecomposition failed");
  Eigen::VectorXd vals = eig.eigenvalues();
  const double scale = std::max(1.0, vals.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < -tol * scale)
      throw std::runtime_error("psd_sqrt: matrix is not positive semidefinite");
    vals(i) = std::sqrt(std::max(vals(i), 0.0));
  }
  return eig.eigenvectors() * vals.asDiagonal() *
         eig.eigenvectors().adjoint();
}

BernsteinTerms build_bernstein_terms(std::span<const Eigen::MatrixXcd> v_energy,
                                     const Eigen::VectorXcd& h_est,
                                     const Eigen::MatrixXcd& error_cov,
                                     const EhRequirement& req, double tau,
                                     double noise_power) {
  if (tau <= 0.0 || tau >= 1.0)
    throw std::invalid_argument("build_bernstein_terms: tau must be in (0, 1)");
  const Eigen::Index n = h_est.size();
  Eigen::MatrixXcd v_sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& v : v_energy) v_sum += v;

  const Eigen::MatrixXcd root = psd_sqrt(error_cov);
  BernsteinTerms terms;
  terms.D = root * v_sum * root;
  terms.D = 0.5 * (terms.D + terms.D.adjoint().eval());  // clean round-off skew
  terms.d = root * (v_sum * h_est);
  terms.xi = req.e_min / (tau * req.eta) - noise_power -
             std::real(h_est.dot(v_sum * h_est));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(terms.D,
                                                      Eigen::EigenvaluesOnly);
  terms.s_minus = std::max(-eig.eigenvalues().minCoeff(), 0.0);
  return terms;
}

double bernstein_threshold(const BernsteinTerms& terms, double delta) {
  if (delta <= 0.0)
    throw std::invalid_argument("bernstein_threshold: delta must be positive");
  const double quad = terms.D.squaredNorm() + 2.0 * terms.d.squaredNorm();
  return terms.D.trace().real() - std::sqrt(2.0 * delta) * std::sqrt(quad) -
         delta * terms.s_minus;
}

double BernsteinTriple::lmi_residual(double m) const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(D, Eigen::EigenvaluesOnly);
  return m + eig.eigenvalues().minCoeff();
}

BernsteinTriple three_inequality_form(const BernsteinTerms& terms, double delta) {
  if (delta <= 0.0)
    throw std::invalid_argument("three_inequality_form: delta must be positive");
  BernsteinTriple t;
  t.D = terms.D;
  t.trace_d = terms.D.trace().real();
  t.soc_rhs = std::sqrt(terms.D.squaredNorm() + 2.0 * terms.d.squaredNorm());
  t.sqrt_two_delta = std::sqrt(2.0 * delta);
  t.delta = delta;
  t.xi = terms.xi;
  t.s_minus = terms.s_minus;
  return t;
}

double monte_carlo_outage(std::span<const Eigen::MatrixXcd> v_energy,
                          const Eigen::VectorXcd& h_est,
                          const Eigen::MatrixXcd& error_cov,
                          const EhRequirement& req, double tau,
                          double noise_power, std::int64_t n_samples,
                          std::uint64_t seed) {
  if (n_samples < 1)
    throw std::invalid_argument("monte_carlo_outage: n_samples must be >= 1");
  const Eigen::Index n = h_est.size();
  const Eigen::MatrixXcd root = psd_sqrt(error_cov);
  const bool zero_error = root.squaredNorm() == 0.0;

  // sum_j V_j once; the per-draw energy is a single quadratic form.
  Eigen::MatrixXcd v_sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& v : v_energy) v_sum += v;

  auto energy_at = [&](const Eigen::VectorXcd& h) {
    return tau * req.eta * (std::real(h.dot(v_sum * h)) + noise_power);
  };

  if (zero_error) return energy_at(h_est) < req.e_min ? 1.0 : 0.0;

  std::int64_t outages = 0;
  std::int64_t done = 0;
  std::uint64_t chunk_index = 0;
  Eigen::VectorXcd c(n);
  while (done < n_samples) {
    const std::int64_t batch = std::min(kOutageChunk, n_samples - done);
    Rng rng(Rng::derive_seed(seed, chunk_index++));
    for (std::int64_t s = 0; s < batch; ++s) {
      for (Eigen::Index i = 0; i < n; ++i) c(i) = rng.cgaussian();
      const Eigen::VectorXcd h = h_est + root * c;
      if (energy_at(h) < req.e_min) ++outages;
    }
    done += batch;
  }
  return static_cast<double>(outages) / static_cast<double>(n_samples);
}

}  // namespace swipt
