// SPDX-License-Identifier: Apache-2.0
//
// Secrecy metrics of a wiretap link whose main (D) and eavesdropper (E)
// channels fade independently with FTR statistics:
//
//   asc        E[max(ln(1+g_D) - ln(1+g_E), 0)]            (nats)
//   sop        P{g_D < theta g_E + theta - 1},  theta = e^R_s
//   sop_lower  P{g_D < theta g_E}                            (<= sop)
//   spsc       P{g_D > g_E} = 1 - sop_lower at R_s = 0
//
// Each closed form is a double series over the two channels' mixture
// weights, truncated where each channel's dropped mass meets its target.
// The *_quadrature_oracle functions evaluate the defining integrals of the
// same truncated distributions numerically and serve as an independent
// check of the series algebra.
#pragma once

#include "ftrsec/ftr_model.hpp"
#include "ftrsec/quadrature.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ftrsec {

/// Both channels are given in SNR units (see snr_domain).
struct WiretapScenario {
  FtrParams main;
  FtrParams eaves;
  double rate_nats = 0.0;

  void validate() const;
  double theta() const;
  /// Ratio of average SNRs, sigma_D^2 (K_D+1) / (sigma_E^2 (K_E+1)).
  double rho() const;
  /// (K_E+1) / (K_D+1).
  double eta_ratio() const;
  /// sigma_D^2 / sigma_E^2, equal to rho() * eta_ratio().
  double sigma2_ratio() const;
};

struct TruncationTargets {
  double eps_main = 1e-5;
  double eps_eaves = 1e-5;
  int n_max = 200;
};

struct MetricResult {
  double value = 0.0;
  int n_trunc_main = 0;
  int n_trunc_eaves = 0;
  /// eps_D + eps_E; a heuristic bound, the joint truncation error is not bounded rigorously.
  double eps_bound = 0.0;
  std::optional<double> oracle_delta;
  /// False when either coefficient table missed its truncation target.
  bool converged = true;
  std::vector<std::string> diagnostics;
};

struct OracleValue {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

struct ChannelTables {
  CoefficientTable main;
  CoefficientTable eaves;
};

ChannelTables build_tables(const WiretapScenario& scenario, const TruncationTargets& targets = {});

MetricResult asc(const CoefficientTable& main, const CoefficientTable& eaves);
MetricResult asc(const WiretapScenario& scenario, const TruncationTargets& targets = {});

MetricResult sop(const CoefficientTable& main, const CoefficientTable& eaves, double rate_nats);
MetricResult sop(const WiretapScenario& scenario, const TruncationTargets& targets = {});

MetricResult sop_lower(const CoefficientTable& main, const CoefficientTable& eaves,
                       double rate_nats);
MetricResult sop_lower(const WiretapScenario& scenario, const TruncationTargets& targets = {});

/// Rate is ignored; evaluates 1 - sop_lower at rate 0.
MetricResult spsc(const CoefficientTable& main, const CoefficientTable& eaves);
MetricResult spsc(const WiretapScenario& scenario, const TruncationTargets& targets = {});

/// I1 + I2 - I3 by nested one-dimensional quadrature of snr_pdf / snr_cdf.
OracleValue asc_quadrature_oracle(const CoefficientTable& main, const CoefficientTable& eaves,
                                  const QuadratureOptions& opts = {});
/// int F_D(theta g + theta - 1) f_E(g) dg
OracleValue sop_quadrature_oracle(const CoefficientTable& main, const CoefficientTable& eaves,
                                  double rate_nats, const QuadratureOptions& opts = {});
/// int F_D(theta g) f_E(g) dg
OracleValue sop_lower_quadrature_oracle(const CoefficientTable& main,
                                        const CoefficientTable& eaves, double rate_nats,
                                        const QuadratureOptions& opts = {});

/// |value - oracle| <= max(1e-4 |oracle|, 1e-8)
bool agrees_with_oracle(double value, double oracle);

enum class RateUnit { nats, bits };

/// Rate in nats; bits are scaled by ln 2. Throws on negative rates.
double rate_unit_convert(double rate, RateUnit unit);

}  // namespace ftrsec
