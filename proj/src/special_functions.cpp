// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/special_functions.hpp"

#include "ftrsec/compensated_sum.hpp"
#include "ftrsec/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ftrsec {

namespace {

// Series and continued fractions stop three decades below the requested
// accuracy so the neglected remainder stays inside the target.
double stopping_tol(const SpecialFnAccuracy& acc) {
  return std::max(acc.target_rel_err * 1e-3, std::numeric_limits<double>::epsilon());
}

[[noreturn]] void no_convergence(const char* what) {
  throw std::runtime_error(std::string(what) + ": iteration limit reached");
}

constexpr double kTiny = 1e-300;

// ln gamma(a, x) via the power series, valid for x < a + 1.
double log_lower_gamma_series(double a, double x, const SpecialFnAccuracy& acc) {
  const double tol = stopping_tol(acc);
  double ap = a;
  double term = 1.0 / a;
  CompensatedSum<> sum(term);
  for (int i = 0; i < acc.max_iterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum.value()) * tol) {
      return std::log(sum.value()) - x + a * std::log(x);
    }
  }
  no_convergence("lower_incomplete_gamma series");
}

// Regularized upper gamma Q(a, x) via the Legendre continued fraction
// (modified Lentz), valid for x >= a + 1.
double upper_gamma_q_cf(double a, double x, const SpecialFnAccuracy& acc) {
  const double tol = stopping_tol(acc);
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= acc.max_iterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < tol) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  no_convergence("lower_incomplete_gamma continued fraction");
}

void check_gamma_args(double a, double x) {
  if (!(a > 0.0)) throw std::domain_error("incomplete gamma: a must be positive");
  if (!(x >= 0.0)) throw std::domain_error("incomplete gamma: x must be nonnegative");
}

}  // namespace

void SpecialFnAccuracy::validate() const {
  if (!(target_rel_err > 0.0 && target_rel_err < 1e-3)) {
    throw std::invalid_argument("SpecialFnAccuracy: target_rel_err must lie in (0, 1e-3)");
  }
  if (max_iterations < 10) {
    throw std::invalid_argument("SpecialFnAccuracy: max_iterations must be at least 10");
  }
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: x must be positive");
  return std::lgamma(x);
}

double log_lower_incomplete_gamma(double a, double x, const SpecialFnAccuracy& acc) {
  check_gamma_args(a, x);
  if (x == 0.0) return -std::numeric_limits<double>::infinity();
  if (x < a + 1.0) return log_lower_gamma_series(a, x, acc);
  return std::lgamma(a) + std::log1p(-upper_gamma_q_cf(a, x, acc));
}

double lower_incomplete_gamma(double a, double x, const SpecialFnAccuracy& acc) {
  return std::exp(log_lower_incomplete_gamma(a, x, acc));
}

double regularized_lower_gamma(double a, double x, const SpecialFnAccuracy& acc) {
  check_gamma_args(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return std::exp(log_lower_gamma_series(a, x, acc) - std::lgamma(a));
  return 1.0 - upper_gamma_q_cf(a, x, acc);
}

double exp_integral_en_scaled(int n, double x, const SpecialFnAccuracy& acc) {
  if (n < 1) throw std::domain_error("exp_integral_en: n must be >= 1");
  if (!(x > 0.0)) throw std::domain_error("exp_integral_en: x must be positive");
  const double tol = stopping_tol(acc);
  const int nm1 = n - 1;

  if (x > 1.0) {
    // Continued fraction; h converges to e^x E_n(x).
    double b = x + n;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= acc.max_iterations; ++i) {
      const double an = -static_cast<double>(i) * (nm1 + i);
      b += 2.0;
      d = 1.0 / (an * d + b);
      c = b + an / c;
      const double del = c * d;
      h *= del;
      if (std::abs(del - 1.0) < tol) return h;
    }
    no_convergence("exp_integral_en continued fraction");
  }

  // Power series around the origin; the n-1 term carries the digamma.
  constexpr double euler = std::numbers::egamma;
  double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - euler;
  double fact = 1.0;
  for (int i = 1; i <= acc.max_iterations; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -euler;
      for (int k = 1; k <= nm1; ++k) psi += 1.0 / k;
      del = fact * (-std::log(x) + psi);
    }
    ans += del;
    if (std::abs(del) < std::abs(ans) * tol) return ans * std::exp(x);
  }
  no_convergence("exp_integral_en series");
}

double exp_integral_en(int n, double x, const SpecialFnAccuracy& acc) {
  return exp_integral_en_scaled(n, x, acc) * std::exp(-x);
}

double upper_incomplete_gamma_nonpos(int order, double x, const SpecialFnAccuracy& acc) {
  if (order > 0) throw std::domain_error("upper_incomplete_gamma_nonpos: order must be <= 0");
  if (!(x > 0.0)) throw std::domain_error("upper_incomplete_gamma_nonpos: x must be positive");
  const int n = -order;
  const double log_value = -n * std::log(x) - x + std::log(exp_integral_en_scaled(n + 1, x, acc));
  return std::exp(log_value);
}

double s_function_quadrature(int w, double mu) {
  if (w < 1) throw std::domain_error("s_function: w must be >= 1");
  if (!(mu > 0.0)) throw std::domain_error("s_function: mu must be positive");
  // Substituting u = mu t turns the integrand into ln(1 + u/mu) times a
  // unit-mass Gamma(w) density, whose bulk sits at u = w - 1.
  const double lg = std::lgamma(static_cast<double>(w));
  auto integrand = [w, mu, lg](double u) {
    if (u <= 0.0) return w == 1 ? std::log1p(u / mu) : 0.0;
    const double log_density = (w - 1) * std::log(u) - u - lg;
    return std::log1p(u / mu) * std::exp(log_density);
  };
  const double split = std::max(1.0, static_cast<double>(w - 1));
  const QuadratureOptions opts{1e-12, 20};
  const double head = integrate(integrand, 0.0, split, opts).value;
  const double tail = integrate(integrand, split, std::numeric_limits<double>::infinity(), opts).value;
  return std::exp(lg - w * std::log(mu) + std::log(head + tail));
}

SFunctionValue s_function(int w, double mu, const SpecialFnAccuracy& acc) {
  if (w < 1) throw std::domain_error("s_function: w must be >= 1");
  if (!(mu > 0.0)) throw std::domain_error("s_function: mu must be positive");

  // Summand k scaled by mu^w e^(-mu): Gamma(k-w, mu) mu^(w-k) e^mu = e^mu E_(w-k+1)(mu).
  CompensatedSum<> sum;
  double largest = 0.0;
  for (int k = 1; k <= w; ++k) {
    const double term = exp_integral_en_scaled(w - k + 1, mu, acc);
    largest = std::max(largest, std::abs(term));
    sum += term;
  }
  const double total = sum.value();

  SFunctionValue out;
  if (std::isfinite(total) && total > 1e-9 * largest) {
    out.log_value = std::lgamma(static_cast<double>(w)) - w * std::log(mu) + std::log(total);
  } else {
    out.used_quadrature = true;
    out.log_value = std::log(s_function_quadrature(w, mu));
  }
  out.value = std::exp(out.log_value);
  return out;
}

SFunctionSeries::SFunctionSeries(double mu, int w_max, const SpecialFnAccuracy& acc) : mu_(mu) {
  if (!(mu > 0.0)) throw std::domain_error("SFunctionSeries: mu must be positive");
  if (w_max < 1) throw std::domain_error("SFunctionSeries: w_max must be >= 1");
  log_s_.resize(static_cast<std::size_t>(w_max));
  const double log_mu = std::log(mu);
  CompensatedSum<> prefix;
  double largest = 0.0;
  for (int w = 1; w <= w_max; ++w) {
    const double term = exp_integral_en_scaled(w, mu, acc);
    largest = std::max(largest, std::abs(term));
    prefix += term;
    const double total = prefix.value();
    double log_s;
    if (std::isfinite(total) && total > 1e-9 * largest) {
      log_s = std::lgamma(static_cast<double>(w)) - w * log_mu + std::log(total);
    } else {
      ++fallbacks_;
      log_s = std::log(s_function_quadrature(w, mu));
    }
    log_s_[static_cast<std::size_t>(w - 1)] = log_s;
  }
}

double SFunctionSeries::log_value(int w) const {
  if (w < 1 || w > w_max()) throw std::out_of_range("SFunctionSeries: order out of range");
  return log_s_[static_cast<std::size_t>(w - 1)];
}

double SFunctionSeries::value(int w) const { return std::exp(log_value(w)); }

}  // namespace ftrsec
