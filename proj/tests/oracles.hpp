// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations used only by the tests. None of them call into
// the library's numerical code: they use Boost special functions, Boost
// double-exponential quadrature, and textbook series.
#pragma once

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// ln Gamma via upward shift and the Stirling series.
inline double ln_gamma_stirling(double x) {
  double shift = 0.0;
  while (x < 20.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double z2 = 1.0 / (x * x);
  const double series =
      (1.0 / 12.0 -
       z2 * (1.0 / 360.0 -
             z2 * (1.0 / 1260.0 - z2 * (1.0 / 1680.0 - z2 * (1.0 / 1188.0 - z2 * 691.0 / 360360.0))))) /
      x;
  return shift + (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

// ln Gamma via the Lanczos approximation (g = 7, 9 terms) with reflection.
inline double ln_gamma_lanczos(double x) {
  static constexpr double c[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                  771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                  -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  if (x < 0.5) {
    return std::log(std::numbers::pi / std::abs(std::sin(std::numbers::pi * x))) -
           ln_gamma_lanczos(1.0 - x);
  }
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t + std::log(a);
}

template <typename F>
double integrate_finite(F f, double a, double b, double tol = 1e-13) {
  boost::math::quadrature::tanh_sinh<double> q;
  return q.integrate(f, a, b, tol);
}

template <typename F>
double integrate_to_inf(F f, double a, double tol = 1e-13) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate(f, a, kInf, tol);
}

// lower incomplete gamma by quadrature of t^(a-1) e^-t on [0, x]
inline double lower_gamma_quad(double a, double x) {
  return integrate_finite([a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, 0.0, x);
}

// E_n(x) by quadrature of e^(-x t) t^(-n) on [1, inf)
inline double en_quad(int n, double x) {
  return integrate_to_inf([=](double t) { return std::exp(-x * t) * std::pow(t, -n); }, 1.0);
}

// Gamma(-n, x) by quadrature of t^(-n-1) e^-t on [x, inf)
inline double upper_gamma_neg_quad(int n, double x) {
  return integrate_to_inf([=](double t) { return std::pow(t, -n - 1.0) * std::exp(-t); }, x);
}

// S(w, mu) = int_0^inf ln(1+t) t^(w-1) e^(-mu t) dt
//          = Gamma(w) mu^-w E[ln(1 + G / mu)],  G ~ Gamma(w, 1).
inline double s_function_quad(int w, double mu) {
  const double lg = boost::math::lgamma(static_cast<double>(w));
  const double mean_log = integrate_to_inf(
      [=](double s) {
        if (s == 0.0) return 0.0;
        return std::log1p(s / mu) * std::exp((w - 1.0) * std::log(s) - s - lg);
      },
      0.0, 1e-12);
  return std::exp(lg - w * std::log(mu)) * mean_log;
}

// d_j by the periodic trapezoid rule over the full circle.
inline double log_d_trapezoid(double m, double k, double delta, int j, int points = 4096) {
  std::vector<double> h(static_cast<std::size_t>(points));
  double hmax = -kInf;
  for (int i = 0; i < points; ++i) {
    const double u = 1.0 + delta * std::cos(2.0 * std::numbers::pi * i / points);
    const double lead = j == 0 ? 0.0 : (u > 0.0 ? j * std::log(u) : -kInf);
    h[static_cast<std::size_t>(i)] = lead - (m + j) * std::log(m + k * u);
    hmax = std::max(hmax, h[static_cast<std::size_t>(i)]);
  }
  double acc = 0.0;
  for (double v : h) acc += std::exp(v - hmax);
  return boost::math::lgamma(m + j) + hmax + std::log(acc / points);
}

// The FTR SNR law as an explicit Gamma mixture, built from the trapezoid d_j.
struct Mixture {
  std::vector<double> w;
  double sigma2 = 0.5;

  Mixture(double m, double k, double delta, double sigma2_, int n) : sigma2(sigma2_) {
    for (int j = 0; j <= n; ++j) {
      double lw = m * std::log(m) - boost::math::lgamma(m) - boost::math::lgamma(j + 1.0) +
                  log_d_trapezoid(m, k, delta, j);
      if (j > 0) lw += k > 0.0 ? j * std::log(k) : -kInf;
      w.push_back(std::exp(lw));
    }
  }

  double cdf(double g) const {
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] > 0.0) s += w[j] * boost::math::gamma_p(j + 1.0, g / (2.0 * sigma2));
    }
    return s;
  }
  double pdf(double g) const {
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j] > 0.0) {
        s += w[j] * boost::math::gamma_p_derivative(j + 1.0, g / (2.0 * sigma2)) / (2.0 * sigma2);
      }
    }
    return s;
  }
  double mass() const {
    double s = 0.0;
    for (double v : w) s += v;
    return s;
  }
  double mean() const {
    double s = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) s += w[j] * (j + 1.0) * 2.0 * sigma2;
    return s;
  }
};

// P{g_D < theta g_E} summed componentwise with the regularized incomplete beta.
inline double sop_lower_beta(const Mixture& d, const Mixture& e, double theta) {
  const double x = d.sigma2 / e.sigma2;
  const double z = theta / (theta + x);
  double s = 0.0;
  for (std::size_t i = 0; i < d.w.size(); ++i) {
    for (std::size_t j = 0; j < e.w.size(); ++j) {
      if (d.w[i] == 0.0 || e.w[j] == 0.0) continue;
      s += d.w[i] * e.w[j] * boost::math::ibeta(i + 1.0, j + 1.0, z);
    }
  }
  return s;
}

// P{g_D < theta g_E + theta - 1} = E_E[F_D(theta g + theta - 1)].
inline double sop_quad(const Mixture& d, const Mixture& e, double theta) {
  const double scale = e.mean();
  return scale * integrate_to_inf(
                     [&](double u) {
                       const double g = u * scale;
                       return d.cdf(theta * g + theta - 1.0) * e.pdf(g);
                     },
                     0.0, 1e-11);
}

// ASC after integrating by parts. For the truncated laws (masses M_D, M_E)
//   I1 + I2 - I3 = int F_E (M_D - F_D) / (1 + g) dg - (1 - M_D) int ln(1+g) f_E dg.
inline double asc_by_parts(const Mixture& d, const Mixture& e) {
  const double scale = std::max(d.mean(), e.mean());
  const double md = d.mass();
  const double main_part = scale * integrate_to_inf(
                                       [&](double u) {
                                         const double g = u * scale;
                                         return e.cdf(g) * (md - d.cdf(g)) / (1.0 + g);
                                       },
                                       0.0, 1e-11);
  const double se = e.mean();
  const double log_mean_e =
      se * integrate_to_inf([&](double u) { return std::log1p(u * se) * e.pdf(u * se); }, 0.0, 1e-11);
  return main_part - (1.0 - md) * log_mean_e;
}

inline bool rel_close(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(rel * std::abs(b), abs_floor);
}

}  // namespace oracle
