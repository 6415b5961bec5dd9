// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <vector>

namespace swipt {

/// Per-user energy-harvesting requirement. The chance constraint asks
/// Pr{ E_k >= e_min } >= 1 - theta; delta = -ln(theta) is the exponent the
/// Bernstein bound is evaluated at.
struct EhRequirement {
  double e_min = 0.0;  // minimum harvested energy [J]
  double eta = 1.0;    // energy conversion efficiency, in (0, 1]
  double theta = 0.2;  // tolerable outage probability, in (0, 1]
  double delta = 0.0;  // -ln(theta), kept consistent by make()

  static EhRequirement make(double e_min, double eta, double theta);
};

/// How the harvested-energy requirement is enforced.
///  - Chance: Bernstein surrogate at delta = -ln(theta).
///  - StrictMargin: mean - 3*sigma margin on the harvested energy; this is
///    the same inequality with sqrt(2*delta) = 3, i.e. delta = 4.5, and is
///    the "always satisfied" baseline the chance-constrained runs are
///    compared against.
///  - EstimateAsTruth: the CSI estimate is treated as the true channel and
///    the constraint is imposed deterministically on it (no robustness;
///    outage under real errors is expected).
enum class EnergyConstraintMode { Chance, StrictMargin, EstimateAsTruth };

/// delta used by EnergyConstraintMode::StrictMargin (= 3^2 / 2).
inline constexpr double kStrictMarginDelta = 4.5;

/// Effective Bernstein exponent for a mode; EstimateAsTruth has none.
double effective_delta(EnergyConstraintMode mode, const EhRequirement& req);

/// Energy harvested by a user over the energy slot:
/// tau * eta * (sum_j h^H V_j h + noise_power).
double harvested_energy(const Eigen::VectorXcd& h,
                        std::span<const Eigen::MatrixXcd> v_energy, double tau,
                        double eta, double noise_power);

/// Data of the Gaussian quadratic form c^H D c + 2 Re{c^H d} >= xi obtained
/// by whitening the CSI error (c = error_cov^{-1/2} e is CN(0, I)):
///   D = E^{1/2} (sum_j V_j) E^{1/2},
///   d = E^{1/2} (sum_j V_j) h_est,
///   xi = e_min / (tau * eta) - noise_power - h_est^H (sum_j V_j) h_est,
/// with E^{1/2} the PSD square root of the error covariance.
/// s_minus = max(lambda_max(-D), 0) enters the Bernstein bound.
struct BernsteinTerms {
  Eigen::MatrixXcd D;
  Eigen::VectorXcd d;
  double xi = 0.0;
  double s_minus = 0.0;
};

BernsteinTerms build_bernstein_terms(std::span<const Eigen::MatrixXcd> v_energy,
                                     const Eigen::VectorXcd& h_est,
                                     const Eigen::MatrixXcd& error_cov,
                                     const EhRequirement& req, double tau,
                                     double noise_power);

/// Lower confidence bound on the quadratic form at exponent delta:
///   Tr(D) - sqrt(2 delta) sqrt(||D||_F^2 + 2 ||d||^2) - delta * s_minus.
/// The chance constraint is (conservatively) satisfied iff this is >= xi.
double bernstein_threshold(const BernsteinTerms& terms, double delta);

/// The threshold inequality split into its solver-ready epigraph form:
///   Tr(D) - sqrt(2 delta) x - delta m >= xi          (linear)
///   x >= sqrt(||D||_F^2 + 2 ||d||^2)                 (second-order cone)
///   m I + D >= 0, m >= 0                             (LMI + bound)
/// Feasibility at the canonical witness (x = the SOC right-hand side,
/// m = s_minus) is equivalent to bernstein_threshold(terms, delta) >= xi.
struct BernsteinTriple {
  Eigen::MatrixXcd D;
  double trace_d = 0.0;
  double soc_rhs = 0.0;      // sqrt(||D||_F^2 + 2||d||^2)
  double sqrt_two_delta = 0.0;
  double delta = 0.0;
  double xi = 0.0;
  double s_minus = 0.0;

  double canonical_x() const { return soc_rhs; }
  double canonical_m() const { return s_minus; }
  /// Residuals of the three inequalities at a candidate (x, m);
  /// all >= 0 means feasible.
  double linear_residual(double x, double m) const {
    return trace_d - sqrt_two_delta * x - delta * m - xi;
  }
  double soc_residual(double x) const { return x - soc_rhs; }
  double lmi_residual(double m) const;
  bool feasible(double x, double m, double tol = 0.0) const {
    return linear_residual(x, m) >= -tol && soc_residual(x) >= -tol &&
           lmi_residual(m) >= -tol && m >= -tol;
  }
};

BernsteinTriple three_inequality_form(const BernsteinTerms& terms, double delta);

/// Empirical outage probability: fraction of CSI-error draws e ~ CN(0, cov)
/// under which the harvested energy at h_est + e falls below e_min.
/// Deterministic given the seed; draws are consumed in chunks of
/// kOutageChunk samples whose partial counts are reduced in chunk order, so
/// a parallel implementation over chunk seeds gives identical results.
double monte_carlo_outage(std::span<const Eigen::MatrixXcd> v_energy,
                          const Eigen::VectorXcd& h_est,
                          const Eigen::MatrixXcd& error_cov,
                          const EhRequirement& req, double tau,
                          double noise_power, std::int64_t n_samples,
                          std::uint64_t seed);

inline constexpr std::int64_t kOutageChunk = 4096;

/// PSD square root via eigendecomposition; eigenvalues below -tol reject the
/// matrix, tiny negatives are clamped to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& m, double tol = 1e-10);

}  // namespace swipt
