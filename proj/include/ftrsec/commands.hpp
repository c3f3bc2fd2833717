// SPDX-License-Identifier: Apache-2.0
//
// The four ftrsec subcommands. Each writes its report to a stream and
// returns a process exit code, so they can be driven from tests as well as
// from the command-line front end.
#pragma once

#include "ftrsec/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ftrsec {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerics = 3,
  kExitValidation = 4,
};

inline constexpr const char* kCsvHeader =
    "sweep_var,value,metric,analytic,oracle,mc_mean,mc_stderr,n_trunc_d,n_trunc_e";

/// Rows of (m, K, delta, N, eps) for both configured channels, or for three
/// reference parameter sets when no config is given. Every N is re-checked
/// against an independently built fixed-order table. `target_eps` overrides
/// the configured (or default 1e-5) target.
int cmd_truncation(const std::optional<ScenarioConfig>& cfg, std::ostream& out,
                   std::optional<double> target_eps = std::nullopt);

struct MetricOptions {
  std::string metric;  ///< asc | sop | sopl | spsc
  bool oracle = false;
  bool mc = false;
};

int cmd_metric(const ScenarioConfig& cfg, const MetricOptions& opts, std::ostream& out);

struct SweepOptions {
  std::string var;  ///< gamma_d_db | gamma_e_db | rho_db | rate
  double from = 0.0;
  double to = 0.0;
  int points = 0;
  std::vector<std::string> metrics;
  bool oracle = false;
  bool mc = false;
};

/// CSV on `out`, rows ordered by sweep point then by metric.
int cmd_sweep(const ScenarioConfig& cfg, const SweepOptions& opts, std::ostream& out);

/// Companion gnuplot script for a sweep CSV written to `csv_path`.
std::string gnuplot_script(const SweepOptions& opts, const std::string& csv_path);

struct ValidateOptions {
  /// Multiplies d_1 of both channels before the checks run; 1 leaves them intact.
  double perturb_d1 = 1.0;
};

int cmd_validate(const ScenarioConfig& cfg, const ValidateOptions& opts, std::ostream& out);

/// Parses argv and dispatches. Errors go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ftrsec
