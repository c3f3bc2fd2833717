// SPDX-License-Identifier: Apache-2.0
//
// Scenario configuration files: flat `key = value` lines with dotted keys,
// `#` comments and blank lines. Recognised keys:
//
//   main.m  main.k  main.delta  main.sigma2 | main.avg_snr_db
//   eaves.m eaves.k eaves.delta eaves.sigma2 | eaves.avg_snr_db
//   budget.eb_n0_db budget.r budget.eta budget.r_los
//   rate.value rate.unit            (unit: bits | nats, default bits)
//   numerics.target_eps numerics.n_max numerics.quad_rel_tol
//   mc.samples mc.seed
//
// The channel parameters are physical: sigma2 is half the diffuse power
// before the link gain Eb/N0 r^-eta is applied. avg_snr_db is the average
// SNR after the gain, in dB.
#pragma once

#include "ftrsec/ftr_model.hpp"
#include "ftrsec/monte_carlo.hpp"
#include "ftrsec/quadrature.hpp"
#include "ftrsec/secrecy.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace ftrsec {

/// Load or validation failure. line() is 1-based, or 0 when the problem is
/// not tied to one line (for example a missing key).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct ChannelConfig {
  double m = 1.0;
  double k = 0.0;
  double delta = 0.0;
  std::optional<double> sigma2;
  std::optional<double> avg_snr_db;

  bool operator==(const ChannelConfig&) const = default;
};

struct ScenarioConfig {
  ChannelConfig main;
  ChannelConfig eaves;

  double eb_n0_db = 0.0;
  double r = 1.0;
  double eta = 2.0;
  double r_los = 1.0;

  std::optional<double> rate_value;
  RateUnit rate_unit = RateUnit::bits;

  double target_eps = 1e-5;
  int n_max = 200;
  double quad_rel_tol = 1e-10;

  std::uint64_t mc_samples = 1'000'000;
  std::uint64_t mc_seed = 1;

  bool operator==(const ScenarioConfig&) const = default;

  LinkBudget budget() const;
  /// Channel with sigma2 resolved (from avg_snr_db when needed), before the link gain.
  FtrParams physical(const ChannelConfig& ch) const;
  /// The same channel in SNR units.
  FtrParams snr_params(const ChannelConfig& ch) const;
  double average_snr_db(const ChannelConfig& ch) const;
  /// Configured rate in nats, 0 when absent.
  double rate_nats() const;
  /// SNR-domain scenario, as consumed by the closed forms.
  WiretapScenario scenario() const;
  /// Physical scenario, as consumed by the sampler together with budget().
  WiretapScenario physical_scenario() const;
  TruncationTargets targets() const;
  QuadratureOptions quadrature() const;
  SampleConfig sampling() const;

  /// Re-checks every field and cross-field rule; throws ConfigError with line 0.
  void validate(const std::string& source = "config") const;
};

ScenarioConfig parse_config(std::istream& in, const std::string& source = "config");
ScenarioConfig load_config(const std::filesystem::path& path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& cfg);

}  // namespace ftrsec
