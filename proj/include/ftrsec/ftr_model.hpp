// SPDX-License-Identifier: Apache-2.0
//
// Fluctuating two-ray (FTR) fading: parameters, the mixture coefficients of
// the SNR distribution, truncation control, and the LOS-ball link budget.
//
// The SNR density is a mixture of Gamma(j+1, 2 sigma^2) densities,
//
//   f(g) = sum_j c_j g^j exp(-g / 2 sigma^2) / (j! (2 sigma^2)^(j+1)),
//   c_j  = m^m / Gamma(m) * K^j d_j / j!,
//
// with
//
//   d_j = Gamma(m+j) / (2 pi) int_0^{2 pi} (1 + D cos t)^j / (m + K (1 + D cos t))^(m+j) dt,
//
// which follows from conditioning on the Gamma(m, 1/m) specular fluctuation
// and the phase difference t of the two rays, then expanding the Rician
// kernel. The weights c_j sum to one; eps(N) = 1 - sum_{j<=N} c_j is the
// probability mass dropped by truncating after N.
#pragma once

#include <string>
#include <vector>

namespace ftrsec {

struct FtrParams {
  double m = 1.0;       ///< Gamma fluctuation shape of the specular rays; any positive real.
  double k = 0.0;       ///< Specular-to-diffuse power ratio.
  double delta = 0.0;   ///< Similarity of the two specular rays, in [0, 1].
  double sigma2 = 0.5;  ///< Half the diffuse power.

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
  /// Mean of the SNR implied by these parameters, 2 sigma^2 (1 + K).
  double mean_snr() const { return 2.0 * sigma2 * (1.0 + k); }

  bool operator==(const FtrParams&) const = default;
};

struct LinkBudget {
  double eb_n0 = 1.0;  ///< Linear Eb/N0.
  double r = 1.0;      ///< Propagation distance.
  double eta = 2.0;    ///< Path-loss exponent.
  double r_los = 1.0;  ///< LOS ball radius; the model requires r <= r_los.

  /// Throws on hard violations (non-positive fields, r > r_los). Returns
  /// warnings for soft ones, such as a path-loss exponent outside [1.5, 8].
  std::vector<std::string> validate() const;
  /// Linear power gain Eb/N0 * r^(-eta) applied to the fading power.
  double gain() const;

  bool operator==(const LinkBudget&) const = default;
};

/// Average SNR (Eb/N0) 2 sigma^2 (1 + K) r^(-eta).
double average_snr(const FtrParams& params, const LinkBudget& budget);

/// Inverse of average_snr with respect to sigma^2.
double sigma2_for_average_snr(double avg_snr, double k, const LinkBudget& budget);

/// The same channel with sigma^2 expressed in SNR units, i.e. scaled by the
/// link gain. The distribution functions below take parameters in SNR units.
FtrParams snr_domain(const FtrParams& params, const LinkBudget& budget);

/// d_j by Gauss-Legendre quadrature over the ray phase difference. Memoized
/// per (m, K, delta, j); sigma^2 does not enter.
double d_coefficient(const FtrParams& params, int j);
double log_d_coefficient(const FtrParams& params, int j);

class CoefficientTable {
 public:
  /// Table truncated after exactly n_trunc (no target search).
  CoefficientTable(const FtrParams& params, int n_trunc);

  const FtrParams& params() const { return params_; }
  int n_trunc() const { return static_cast<int>(weights_.size()) - 1; }
  /// eps(n_trunc).
  double eps() const;
  /// False when build_coefficient_table hit n_max before reaching its target.
  bool converged() const { return converged_; }
  double target_eps() const { return target_eps_; }

  double d(int j) const;
  std::vector<double> d() const;
  double log_d(int j) const;
  /// Mixture weights c_0..c_N.
  const std::vector<double>& weights() const { return weights_; }

  /// Copy with a different sigma^2; the coefficients are unchanged.
  CoefficientTable with_sigma2(double sigma2) const;
  /// Copy with d_j multiplied by `factor`. Only meant for probing how
  /// sensitive the validation checks are to a wrong coefficient.
  CoefficientTable with_scaled_coefficient(int j, double factor) const;

 private:
  friend CoefficientTable build_coefficient_table(const FtrParams&, double, int);
  CoefficientTable() = default;

  FtrParams params_;
  std::vector<double> log_d_;
  std::vector<double> weights_;
  double target_eps_ = 0.0;
  bool converged_ = true;
};

/// Smallest N with eps(N) <= target_eps, or the table at n_max with
/// converged() == false if the target is not reached.
CoefficientTable build_coefficient_table(const FtrParams& params, double target_eps = 1e-5,
                                         int n_max = 200);

/// eps(n) = 1 - sum_{j<=n} c_j; noise in (-1e-12, 0) is clamped to 0.
/// Throws std::out_of_range when n > table.n_trunc().
double truncation_error(const CoefficientTable& table, int n);

/// Truncated SNR density at gamma >= 0.
double snr_pdf(const CoefficientTable& table, double gamma);

/// Truncated SNR distribution function at gamma >= 0, clamped to [0, 1].
double snr_cdf(const CoefficientTable& table, double gamma);

}  // namespace ftrsec
