// SPDX-License-Identifier: Apache-2.0
//
// Scalar special functions used by the FTR series expansions: log-gamma,
// lower incomplete gamma, the generalized exponential integral E_n, the upper
// incomplete gamma at nonpositive integer order, and the logarithmic moment
// integral S(w, mu) = int_0^inf ln(1+t) t^(w-1) exp(-mu t) dt.
//
// All functions are pure and thread-safe. Domain violations throw
// std::domain_error.
#pragma once

#include <vector>

namespace ftrsec {

struct SpecialFnAccuracy {
  double target_rel_err = 1e-12;
  int max_iterations = 500;

  /// Throws std::invalid_argument unless 0 < target_rel_err < 1e-3 and
  /// max_iterations >= 10.
  void validate() const;
};

double ln_gamma(double x);

/// gamma(a, x) = int_0^x t^(a-1) e^(-t) dt (not regularized).
double lower_incomplete_gamma(double a, double x, const SpecialFnAccuracy& acc = {});

/// P(a, x) = gamma(a, x) / Gamma(a).
double regularized_lower_gamma(double a, double x, const SpecialFnAccuracy& acc = {});

/// ln gamma(a, x); finite even when gamma(a, x) underflows.
double log_lower_incomplete_gamma(double a, double x, const SpecialFnAccuracy& acc = {});

/// E_n(x) = int_1^inf e^(-x t) t^(-n) dt for n >= 1, x > 0.
double exp_integral_en(int n, double x, const SpecialFnAccuracy& acc = {});

/// e^x E_n(x); stays representable for large x where E_n underflows.
double exp_integral_en_scaled(int n, double x, const SpecialFnAccuracy& acc = {});

/// Gamma(order, x) for order <= 0, via Gamma(-n, x) = x^(-n) E_(n+1)(x).
double upper_incomplete_gamma_nonpos(int order, double x, const SpecialFnAccuracy& acc = {});

struct SFunctionValue {
  double value = 0.0;
  double log_value = 0.0;
  /// True when the finite-sum form cancelled and adaptive quadrature was used.
  bool used_quadrature = false;
};

/// S(w, mu) = (w-1)! e^mu sum_{k=1}^{w} Gamma(k-w, mu) / mu^k.
///
/// The finite sum is checked for cancellation against the largest summand;
/// when the sum falls below 1e-9 of that magnitude (or is not finite) the
/// defining integral is evaluated by adaptive quadrature instead.
SFunctionValue s_function(int w, double mu, const SpecialFnAccuracy& acc = {});

/// S(w, mu) by direct quadrature of its defining integral.
double s_function_quadrature(int w, double mu);

/// Values ln S(w, mu) for w = 1..w_max at a fixed mu.
///
/// Uses the reindexed form S(w, mu) = (w-1)! mu^(-w) sum_{n=1}^{w} e^mu E_n(mu),
/// so one pass over E_1..E_wmax serves every w. Intended for the double series
/// of the secrecy capacity, where the same mu is queried for many orders.
class SFunctionSeries {
 public:
  SFunctionSeries(double mu, int w_max, const SpecialFnAccuracy& acc = {});

  double mu() const { return mu_; }
  int w_max() const { return static_cast<int>(log_s_.size()); }
  double log_value(int w) const;
  double value(int w) const;
  /// Number of orders for which the quadrature fallback fired.
  int quadrature_fallbacks() const { return fallbacks_; }

 private:
  double mu_;
  std::vector<double> log_s_;
  int fallbacks_ = 0;
};

}  // namespace ftrsec
