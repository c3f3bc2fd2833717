// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/secrecy.hpp"

#include "ftrsec/compensated_sum.hpp"
#include "ftrsec/quadrature.hpp"
#include "ftrsec/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace ftrsec {

namespace {

constexpr double kClampSlack = 1e-6;

double lfact(int n) { return std::lgamma(n + 1.0); }

MetricResult skeleton(const CoefficientTable& main, const CoefficientTable& eaves) {
  MetricResult r;
  r.n_trunc_main = main.n_trunc();
  r.n_trunc_eaves = eaves.n_trunc();
  r.eps_bound = std::max(0.0, main.eps()) + std::max(0.0, eaves.eps());
  r.converged = main.converged() && eaves.converged();
  if (!main.converged()) r.diagnostics.push_back("main channel truncation target not reached");
  if (!eaves.converged()) r.diagnostics.push_back("eavesdropper truncation target not reached");
  return r;
}

void clamp_probability(MetricResult& r) {
  if (r.value < -kClampSlack || r.value > 1.0 + kClampSlack) {
    r.diagnostics.push_back("probability outside [0, 1] beyond tolerance: " +
                            std::to_string(r.value));
  }
  r.value = std::clamp(r.value, 0.0, 1.0);
}

void check_rate(double rate_nats) {
  if (!(rate_nats >= 0.0)) throw std::invalid_argument("secrecy rate must be nonnegative");
}

}  // namespace

void WiretapScenario::validate() const {
  main.validate();
  eaves.validate();
  check_rate(rate_nats);
}

double WiretapScenario::theta() const { return std::exp(rate_nats); }

double WiretapScenario::rho() const {
  return main.sigma2 * (main.k + 1.0) / (eaves.sigma2 * (eaves.k + 1.0));
}

double WiretapScenario::eta_ratio() const { return (eaves.k + 1.0) / (main.k + 1.0); }

double WiretapScenario::sigma2_ratio() const { return main.sigma2 / eaves.sigma2; }

ChannelTables build_tables(const WiretapScenario& scenario, const TruncationTargets& targets) {
  scenario.validate();
  return {build_coefficient_table(scenario.main, targets.eps_main, targets.n_max),
          build_coefficient_table(scenario.eaves, targets.eps_eaves, targets.n_max)};
}

// ---------------------------------------------------------------------------
// Average secrecy capacity
//
// With L_X(j) = S(j+1, 1/2s_X) / (j! (2s_X)^(j+1)) = E[ln(1+g) | component j]
// and mu = 1/2s_D + 1/2s_E,
//
//   ASC = sum_{jD,jE} cD cE [ L_D(jD) + L_E(jE)
//           - sum_{n<=jE} S(jD+n+1, mu) / (n! jD! (2s_E)^n (2s_D)^(jD+1))
//           - sum_{n<=jD} S(jE+n+1, mu) / (n! jE! (2s_D)^n (2s_E)^(jE+1)) ]
//         - sum_{jE} cE L_E(jE).
// ---------------------------------------------------------------------------
MetricResult asc(const CoefficientTable& main, const CoefficientTable& eaves) {
  MetricResult r = skeleton(main, eaves);
  const int nd = main.n_trunc();
  const int ne = eaves.n_trunc();
  const double two_sd = 2.0 * main.params().sigma2;
  const double two_se = 2.0 * eaves.params().sigma2;
  const double log_two_sd = std::log(two_sd);
  const double log_two_se = std::log(two_se);
  const auto& cd = main.weights();
  const auto& ce = eaves.weights();

  const SFunctionSeries s_main(1.0 / two_sd, nd + 1);
  const SFunctionSeries s_eaves(1.0 / two_se, ne + 1);
  const SFunctionSeries s_cross(1.0 / two_sd + 1.0 / two_se, nd + ne + 1);
  const int fallbacks = s_main.quadrature_fallbacks() + s_eaves.quadrature_fallbacks() +
                        s_cross.quadrature_fallbacks();
  if (fallbacks > 0) {
    r.diagnostics.push_back("S(w, mu) quadrature fallback used for " + std::to_string(fallbacks) +
                            " orders");
  }

  std::vector<double> l_main(static_cast<std::size_t>(nd + 1));
  std::vector<double> l_eaves(static_cast<std::size_t>(ne + 1));
  for (int j = 0; j <= nd; ++j) {
    l_main[static_cast<std::size_t>(j)] =
        std::exp(s_main.log_value(j + 1) - lfact(j) - (j + 1) * log_two_sd);
  }
  for (int j = 0; j <= ne; ++j) {
    l_eaves[static_cast<std::size_t>(j)] =
        std::exp(s_eaves.log_value(j + 1) - lfact(j) - (j + 1) * log_two_se);
  }

  // cross_d[jD][jE] = sum_{n<=jE} S(jD+n+1, mu) / (n! jD! (2s_E)^n (2s_D)^(jD+1)),
  // built as a running sum over jE; cross_e symmetric.
  auto cross_term = [&](int j_own, int n, double log_two_own, double log_two_other) {
    return std::exp(s_cross.log_value(j_own + n + 1) - lfact(n) - lfact(j_own) -
                    n * log_two_other - (j_own + 1) * log_two_own);
  };
  std::vector<std::vector<double>> cross_e(static_cast<std::size_t>(ne + 1),
                                           std::vector<double>(static_cast<std::size_t>(nd + 1)));
  for (int je = 0; je <= ne; ++je) {
    double running = 0.0;
    for (int jd = 0; jd <= nd; ++jd) {
      running += cross_term(je, jd, log_two_se, log_two_sd);
      cross_e[static_cast<std::size_t>(je)][static_cast<std::size_t>(jd)] = running;
    }
  }

  CompensatedSum<> total;
  for (int jd = 0; jd <= nd; ++jd) {
    const double wd = cd[static_cast<std::size_t>(jd)];
    if (wd == 0.0) continue;
    double cross_d = 0.0;
    for (int je = 0; je <= ne; ++je) {
      cross_d += cross_term(jd, je, log_two_sd, log_two_se);
      const double we = ce[static_cast<std::size_t>(je)];
      if (we == 0.0) continue;
      const double w = wd * we;
      total += w * l_main[static_cast<std::size_t>(jd)];
      total += w * l_eaves[static_cast<std::size_t>(je)];
      total -= w * cross_d;
      total -= w * cross_e[static_cast<std::size_t>(je)][static_cast<std::size_t>(jd)];
    }
  }
  for (int je = 0; je <= ne; ++je) {
    total -= ce[static_cast<std::size_t>(je)] * l_eaves[static_cast<std::size_t>(je)];
  }

  r.value = total.value();
  if (r.value < -kClampSlack) {
    r.diagnostics.push_back("negative secrecy capacity beyond tolerance: " +
                            std::to_string(r.value));
  }
  r.value = std::max(r.value, 0.0);
  return r;
}

MetricResult asc(const WiretapScenario& scenario, const TruncationTargets& targets) {
  const auto t = build_tables(scenario, targets);
  return asc(t.main, t.eaves);
}

// ---------------------------------------------------------------------------
// Secrecy outage probability
//
// Per component pair the outage probability is 1 - T(jD, jE) with
//
//   T = sum_{n<=jD} e^{-(theta-1)/2s_D} / (n! jE! (2s_D)^n)
//       * sum_{q<=n} C(n,q) theta^q (theta-1)^(n-q) Gamma(jE+1+q) (2s_E)^q
//                    / (1 + s_E theta / s_D)^(jE+q+1).
//
// The q-sum A(n, jE) does not depend on jD, so T is a running sum over n.
// At theta = 1 only q = n survives (0^0 = 1).
// ---------------------------------------------------------------------------
MetricResult sop(const CoefficientTable& main, const CoefficientTable& eaves, double rate_nats) {
  check_rate(rate_nats);
  MetricResult r = skeleton(main, eaves);
  const int nd = main.n_trunc();
  const int ne = eaves.n_trunc();
  const double sd = main.params().sigma2;
  const double se = eaves.params().sigma2;
  const double theta = std::exp(rate_nats);
  const double log_theta = rate_nats;
  const double theta_m1 = std::expm1(rate_nats);
  const double log_theta_m1 = theta_m1 > 0.0 ? std::log(theta_m1) : 0.0;
  const double log_two_sd = std::log(2.0 * sd);
  const double log_two_se = std::log(2.0 * se);
  const double log_denominator = std::log1p(se * theta / sd);
  const double shift = -theta_m1 / (2.0 * sd);

  auto a_term = [&](int n, int je, int q) {
    if (n > q && theta_m1 == 0.0) return 0.0;
    const double log_binom = lfact(n) - lfact(q) - lfact(n - q);
    return std::exp(log_binom + q * log_theta + (n - q) * log_theta_m1 + lfact(je + q) +
                    q * log_two_se - (je + q + 1) * log_denominator + shift - lfact(n) -
                    lfact(je) - n * log_two_sd);
  };

  CompensatedSum<> total;
  for (int je = 0; je <= ne; ++je) {
    const double we = eaves.weights()[static_cast<std::size_t>(je)];
    if (we == 0.0) continue;
    double t = 0.0;
    for (int jd = 0; jd <= nd; ++jd) {
      CompensatedSum<> a;
      for (int q = 0; q <= jd; ++q) a += a_term(jd, je, q);
      t += a.value();
      const double wd = main.weights()[static_cast<std::size_t>(jd)];
      total += wd * we;
      total -= wd * we * t;
    }
  }
  r.value = total.value();
  clamp_probability(r);
  return r;
}

MetricResult sop(const WiretapScenario& scenario, const TruncationTargets& targets) {
  const auto t = build_tables(scenario, targets);
  return sop(t.main, t.eaves, scenario.rate_nats);
}

// ---------------------------------------------------------------------------
// Lower bound P{g_D < theta g_E}. With x = s_D^2/s_E^2 (= rho * eta) each
// component pair contributes
//
//   x^jE theta^(jD+1) / (theta + x)^(jD+jE+1)
//     * sum_{k<=jE} (theta/x)^k (jD+jE+1)! / ((jD+1+k)! (jE-k)!).
// ---------------------------------------------------------------------------
MetricResult sop_lower(const CoefficientTable& main, const CoefficientTable& eaves,
                       double rate_nats) {
  check_rate(rate_nats);
  MetricResult r = skeleton(main, eaves);
  const int nd = main.n_trunc();
  const int ne = eaves.n_trunc();
  const double log_x = std::log(main.params().sigma2) - std::log(eaves.params().sigma2);
  const double log_theta = rate_nats;
  const double log_theta_plus_x =
      std::max(log_theta, log_x) + std::log1p(std::exp(-std::abs(log_theta - log_x)));

  CompensatedSum<> total;
  for (int jd = 0; jd <= nd; ++jd) {
    const double wd = main.weights()[static_cast<std::size_t>(jd)];
    if (wd == 0.0) continue;
    for (int je = 0; je <= ne; ++je) {
      const double we = eaves.weights()[static_cast<std::size_t>(je)];
      if (we == 0.0) continue;
      const double lead =
          je * log_x + (jd + 1) * log_theta - (jd + je + 1) * log_theta_plus_x + lfact(jd + je + 1);
      CompensatedSum<> inner;
      for (int k = 0; k <= je; ++k) {
        inner += std::exp(lead + k * (log_theta - log_x) - lfact(jd + 1 + k) - lfact(je - k));
      }
      total += wd * we * inner.value();
    }
  }
  r.value = total.value();
  clamp_probability(r);
  return r;
}

MetricResult sop_lower(const WiretapScenario& scenario, const TruncationTargets& targets) {
  const auto t = build_tables(scenario, targets);
  return sop_lower(t.main, t.eaves, scenario.rate_nats);
}

MetricResult spsc(const CoefficientTable& main, const CoefficientTable& eaves) {
  MetricResult r = sop_lower(main, eaves, 0.0);
  r.value = 1.0 - r.value;
  return r;
}

MetricResult spsc(const WiretapScenario& scenario, const TruncationTargets& targets) {
  const auto t = build_tables(scenario, targets);
  return spsc(t.main, t.eaves);
}

// ---------------------------------------------------------------------------
// Quadrature oracles
// ---------------------------------------------------------------------------
namespace {

OracleValue to_oracle(const QuadratureResult& q) { return {q.value, q.abs_error, q.converged}; }

}  // namespace

OracleValue asc_quadrature_oracle(const CoefficientTable& main, const CoefficientTable& eaves,
                                  const QuadratureOptions& opts) {
  const double scale_d = main.params().mean_snr();
  const double scale_e = eaves.params().mean_snr();
  const auto i1 = integrate_half_line(
      [&](double g) { return std::log1p(g) * snr_pdf(main, g) * snr_cdf(eaves, g); }, scale_d,
      opts);
  const auto i2 = integrate_half_line(
      [&](double g) { return std::log1p(g) * snr_pdf(eaves, g) * snr_cdf(main, g); }, scale_e,
      opts);
  const auto i3 = integrate_half_line(
      [&](double g) { return std::log1p(g) * snr_pdf(eaves, g); }, scale_e, opts);
  return {i1.value + i2.value - i3.value, i1.abs_error + i2.abs_error + i3.abs_error,
          i1.converged && i2.converged && i3.converged};
}

OracleValue sop_quadrature_oracle(const CoefficientTable& main, const CoefficientTable& eaves,
                                  double rate_nats, const QuadratureOptions& opts) {
  check_rate(rate_nats);
  const double theta = std::exp(rate_nats);
  return to_oracle(integrate_half_line(
      [&](double g) { return snr_cdf(main, theta * g + theta - 1.0) * snr_pdf(eaves, g); },
      eaves.params().mean_snr(), opts));
}

OracleValue sop_lower_quadrature_oracle(const CoefficientTable& main,
                                        const CoefficientTable& eaves, double rate_nats,
                                        const QuadratureOptions& opts) {
  check_rate(rate_nats);
  const double theta = std::exp(rate_nats);
  return to_oracle(integrate_half_line(
      [&](double g) { return snr_cdf(main, theta * g) * snr_pdf(eaves, g); },
      eaves.params().mean_snr(), opts));
}

bool agrees_with_oracle(double value, double oracle) {
  return std::abs(value - oracle) <= std::max(1e-4 * std::abs(oracle), 1e-8);
}

double rate_unit_convert(double rate, RateUnit unit) {
  if (!(rate >= 0.0)) throw std::invalid_argument("rate must be nonnegative");
  return unit == RateUnit::bits ? rate * std::numbers::ln2 : rate;
}

}  // namespace ftrsec
