// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/commands.hpp"

#include "ftrsec/monte_carlo.hpp"
#include "ftrsec/quadrature.hpp"
#include "ftrsec/secrecy.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace ftrsec {

namespace {

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string g9(double v) { return fmt("%.9g", v); }

bool is_metric(const std::string& name) {
  return name == "asc" || name == "sop" || name == "sopl" || name == "spsc";
}

bool needs_rate(const std::string& name) { return name == "sop" || name == "sopl"; }

struct Evaluation {
  MetricResult result;
  std::optional<OracleValue> oracle;
  std::optional<EstimateWithError> mc;

  bool oracle_agrees() const { return !oracle || agrees_with_oracle(result.value, oracle->value); }
  bool numerics_ok() const { return result.converged && (!oracle || oracle->converged); }
};

Evaluation evaluate(const std::string& metric, const ChannelTables& t, double rate,
                    const QuadratureOptions& quad, bool with_oracle,
                    const WiretapSamples* samples) {
  Evaluation e;
  if (metric == "asc") {
    e.result = asc(t.main, t.eaves);
    if (with_oracle) e.oracle = asc_quadrature_oracle(t.main, t.eaves, quad);
    if (samples) e.mc = estimate_asc(*samples);
  } else if (metric == "sop") {
    e.result = sop(t.main, t.eaves, rate);
    if (with_oracle) e.oracle = sop_quadrature_oracle(t.main, t.eaves, rate, quad);
    if (samples) e.mc = estimate_sop(*samples, rate);
  } else if (metric == "sopl") {
    e.result = sop_lower(t.main, t.eaves, rate);
    if (with_oracle) e.oracle = sop_lower_quadrature_oracle(t.main, t.eaves, rate, quad);
    if (samples) e.mc = estimate_sop_lower(*samples, rate);
  } else if (metric == "spsc") {
    e.result = spsc(t.main, t.eaves);
    if (with_oracle) {
      auto o = sop_lower_quadrature_oracle(t.main, t.eaves, 0.0, quad);
      o.value = 1.0 - o.value;
      e.oracle = o;
    }
    if (samples) e.mc = estimate_spsc(*samples);
  } else {
    throw std::invalid_argument("unknown metric '" + metric + "' (expected asc, sop, sopl, spsc)");
  }
  if (e.oracle) e.result.oracle_delta = e.result.value - e.oracle->value;
  return e;
}

void check_metric_names(const std::vector<std::string>& metrics, const ScenarioConfig& cfg,
                        bool rate_swept) {
  if (metrics.empty()) throw ConfigError("arguments", 0, "no metric given");
  for (const auto& m : metrics) {
    if (!is_metric(m)) {
      throw ConfigError("arguments", 0,
                        "unknown metric '" + m + "' (expected asc, sop, sopl, spsc)");
    }
    if (needs_rate(m) && !rate_swept && !cfg.rate_value) {
      throw ConfigError("config", 0, "rate.value is required for metric '" + m + "'");
    }
  }
}

WiretapSamples draw(const ScenarioConfig& cfg) {
  const LinkBudget b = cfg.budget();
  return sample_wiretap(cfg.physical_scenario(), cfg.sampling(), b, b);
}

// ---------------------------------------------------------------------------
// truncation
// ---------------------------------------------------------------------------

struct TruncationRow {
  std::string label;
  FtrParams params;
};

}  // namespace

int cmd_truncation(const std::optional<ScenarioConfig>& cfg, std::ostream& out,
                   std::optional<double> target_eps) {
  std::vector<TruncationRow> rows;
  double target = 1e-5;
  int n_max = 200;
  if (cfg) {
    cfg->validate();
    rows.push_back({"main", cfg->physical(cfg->main)});
    rows.push_back({"eaves", cfg->physical(cfg->eaves)});
    target = cfg->target_eps;
    n_max = cfg->n_max;
  } else {
    rows.push_back({"ref1", {15.5, 5.0, 0.4, 0.5}});
    rows.push_back({"ref2", {8.5, 5.0, 0.35, 0.5}});
    rows.push_back({"ref3", {25.5, 3.0, 0.48, 0.5}});
  }
  if (target_eps) {
    if (!(*target_eps >= 1e-9 && *target_eps <= 1.0)) {
      throw ConfigError("arguments", 0, "target_eps must lie in [1e-9, 1]");
    }
    target = *target_eps;
  }

  out << "channel,m,k,delta,n_trunc,eps,target_eps,converged,verified\n";
  bool all_ok = true;
  for (const auto& row : rows) {
    const auto table = build_coefficient_table(row.params, target, n_max);
    const int n = table.n_trunc();
    // Independent check: eps(N) <= target < eps(N-1) on fixed-order tables.
    const double eps_n = truncation_error(CoefficientTable(row.params, n), n);
    const bool below = eps_n <= target;
    const bool minimal = n == 0 || truncation_error(CoefficientTable(row.params, n - 1), n - 1) > target;
    const bool verified = table.converged() && below && minimal;
    all_ok = all_ok && verified;
    out << row.label << ',' << g9(row.params.m) << ',' << g9(row.params.k) << ','
        << g9(row.params.delta) << ',' << n << ',' << fmt("%.6e", table.eps()) << ','
        << g9(target) << ',' << (table.converged() ? "yes" : "no") << ','
        << (verified ? "yes" : "no") << '\n';
  }
  return all_ok ? kExitOk : kExitNumerics;
}

int cmd_metric(const ScenarioConfig& cfg, const MetricOptions& opts, std::ostream& out) {
  cfg.validate();
  check_metric_names({opts.metric}, cfg, false);
  if (opts.mc) cfg.sampling().validate();
  const auto tables = build_tables(cfg.scenario(), cfg.targets());
  std::optional<WiretapSamples> samples;
  if (opts.mc) samples = draw(cfg);
  const auto e = evaluate(opts.metric, tables, cfg.rate_nats(), cfg.quadrature(), opts.oracle,
                          samples ? &*samples : nullptr);

  out << "metric: " << opts.metric << '\n';
  if (needs_rate(opts.metric)) out << "rate_nats: " << g9(cfg.rate_nats()) << '\n';
  out << "value: " << g9(e.result.value) << '\n';
  out << "n_trunc_main: " << e.result.n_trunc_main << '\n';
  out << "n_trunc_eaves: " << e.result.n_trunc_eaves << '\n';
  out << "eps_bound: " << g9(e.result.eps_bound) << '\n';
  if (e.oracle) {
    out << "oracle: " << g9(e.oracle->value) << '\n';
    out << "oracle_delta: " << g9(*e.result.oracle_delta) << '\n';
    out << "oracle_agrees: " << (e.oracle_agrees() ? "yes" : "no") << '\n';
  }
  if (e.mc) {
    out << "mc_mean: " << g9(e.mc->mean) << '\n';
    out << "mc_stderr: " << g9(e.mc->std_error) << '\n';
    out << "mc_samples: " << e.mc->n << '\n';
  }
  for (const auto& d : e.result.diagnostics) out << "diagnostic: " << d << '\n';

  if (!e.numerics_ok()) return kExitNumerics;
  if (!e.oracle_agrees()) return kExitValidation;
  return kExitOk;
}

namespace {

ScenarioConfig point_config(const ScenarioConfig& base, const std::string& var, double v,
                            double eaves_db) {
  ScenarioConfig c = base;
  if (var == "gamma_d_db") {
    c.main.sigma2.reset();
    c.main.avg_snr_db = v;
  } else if (var == "gamma_e_db") {
    c.eaves.sigma2.reset();
    c.eaves.avg_snr_db = v;
  } else if (var == "rho_db") {
    c.main.sigma2.reset();
    c.main.avg_snr_db = eaves_db + v;
  } else if (var == "rate") {
    if (v < 0.0) throw ConfigError("arguments", 0, "rate sweep must stay nonnegative");
    c.rate_value = v;
  }
  return c;
}

struct SweepPoint {
  std::vector<std::string> rows;
  bool numerics_ok = true;
  bool oracle_ok = true;
};

}  // namespace

int cmd_sweep(const ScenarioConfig& cfg, const SweepOptions& opts, std::ostream& out) {
  cfg.validate();
  if (opts.var != "gamma_d_db" && opts.var != "gamma_e_db" && opts.var != "rho_db" &&
      opts.var != "rate") {
    throw ConfigError("arguments", 0,
                      "unknown sweep variable '" + opts.var +
                          "' (expected gamma_d_db, gamma_e_db, rho_db, rate)");
  }
  if (!(opts.from < opts.to)) throw ConfigError("arguments", 0, "sweep range needs from < to");
  if (opts.points < 2) throw ConfigError("arguments", 0, "sweep needs at least 2 points");
  check_metric_names(opts.metrics, cfg, opts.var == "rate");
  if (opts.mc) cfg.sampling().validate();

  const double eaves_db = cfg.average_snr_db(cfg.eaves);
  std::vector<double> values(static_cast<std::size_t>(opts.points));
  for (int i = 0; i < opts.points; ++i) {
    values[static_cast<std::size_t>(i)] =
        i + 1 == opts.points ? opts.to
                             : opts.from + (opts.to - opts.from) * i / (opts.points - 1.0);
  }
  // Resolve every point up front so configuration errors surface before any work.
  std::vector<ScenarioConfig> configs;
  for (double v : values) {
    configs.push_back(point_config(cfg, opts.var, v, eaves_db));
    configs.back().validate();
  }

  std::vector<SweepPoint> results(values.size());
  std::vector<std::exception_ptr> errors(values.size());
  auto run_point = [&](std::size_t i) {
    try {
      const ScenarioConfig& c = configs[i];
      const auto tables = build_tables(c.scenario(), c.targets());
      std::optional<WiretapSamples> samples;
      if (opts.mc) samples = draw(c);
      for (const auto& metric : opts.metrics) {
        const auto e = evaluate(metric, tables, c.rate_nats(), c.quadrature(), opts.oracle,
                                samples ? &*samples : nullptr);
        std::string row = opts.var + ',' + g9(values[i]) + ',' + metric + ',' +
                          g9(e.result.value) + ',';
        row += e.oracle ? g9(e.oracle->value) : "";
        row += ',';
        row += e.mc ? g9(e.mc->mean) + ',' + g9(e.mc->std_error) : ",";
        row += ',' + std::to_string(e.result.n_trunc_main) + ',' +
               std::to_string(e.result.n_trunc_eaves);
        results[i].rows.push_back(std::move(row));
        results[i].numerics_ok = results[i].numerics_ok && e.numerics_ok();
        results[i].oracle_ok = results[i].oracle_ok && e.oracle_agrees();
      }
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(values.size(), std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < values.size(); ++i) run_point(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < values.size(); i = next++) run_point(i);
      });
    }
  }
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }

  out << kCsvHeader << '\n';
  bool numerics_ok = true;
  bool oracle_ok = true;
  for (const auto& p : results) {
    for (const auto& row : p.rows) out << row << '\n';
    numerics_ok = numerics_ok && p.numerics_ok;
    oracle_ok = oracle_ok && p.oracle_ok;
  }
  if (!numerics_ok) return kExitNumerics;
  if (!oracle_ok) return kExitValidation;
  return kExitOk;
}

std::string gnuplot_script(const SweepOptions& opts, const std::string& csv_path) {
  std::ostringstream gp;
  gp << "set datafile separator ','\n";
  gp << "set key autotitle columnhead\n";
  gp << "set xlabel '" << opts.var << "'\n";
  gp << "set ylabel 'value'\n";
  gp << "set grid\n";
  if (opts.metrics.size() == 1 && opts.metrics[0] != "asc") gp << "set logscale y\n";
  gp << "plot";
  for (std::size_t i = 0; i < opts.metrics.size(); ++i) {
    const auto& m = opts.metrics[i];
    gp << (i ? ", \\\n    " : " ") << "'" << csv_path << "' every ::1 using 2:(strcol(3) eq '"
       << m << "' ? $4 : NaN) with linespoints title '" << m << "'";
    if (opts.mc) {
      gp << ", \\\n    '" << csv_path << "' every ::1 using 2:(strcol(3) eq '" << m
         << "' ? $6 : NaN):7 with yerrorbars title '" << m << " (simulation)'";
    }
  }
  gp << "\n";
  return gp.str();
}

namespace {

struct Check {
  std::string name;
  double observed;
  double threshold;
  bool pass;
};

Check upper(const std::string& name, double observed, double threshold) {
  return {name, observed, threshold, observed <= threshold};
}

}  // namespace

int cmd_validate(const ScenarioConfig& cfg, const ValidateOptions& opts, std::ostream& out) {
  cfg.validate();
  try {
    cfg.sampling().validate(true);
  } catch (const std::invalid_argument& e) {
    throw ConfigError("config", 0, std::string("mc.samples: ") + e.what());
  }
  if (!(opts.perturb_d1 > 0.0)) throw ConfigError("arguments", 0, "perturbation factor must be positive");

  const WiretapScenario scenario = cfg.scenario();
  auto tables = build_tables(scenario, cfg.targets());
  if (opts.perturb_d1 != 1.0) {
    if (tables.main.n_trunc() >= 1) tables.main = tables.main.with_scaled_coefficient(1, opts.perturb_d1);
    if (tables.eaves.n_trunc() >= 1) tables.eaves = tables.eaves.with_scaled_coefficient(1, opts.perturb_d1);
  }
  const double rate = cfg.rate_nats();
  const auto quad = cfg.quadrature();
  WiretapSamples samples = draw(cfg);
  const auto n = static_cast<double>(cfg.mc_samples);

  std::vector<Check> checks;
  bool numerics_ok = tables.main.converged() && tables.eaves.converged();

  // Metric agreement first; the distribution checks below sort the samples.
  std::vector<std::pair<std::string, Evaluation>> evals;
  for (const char* metric : {"asc", "sop", "sopl", "spsc"}) {
    evals.emplace_back(metric, evaluate(metric, tables, rate, quad, true, &samples));
  }
  for (const auto& [name, e] : evals) {
    numerics_ok = numerics_ok && e.numerics_ok();
    const double o = e.oracle->value;
    checks.push_back(upper("oracle_" + name, std::abs(e.result.value - o),
                           std::max(1e-4 * std::abs(o), 1e-8)));
  }
  for (const auto& [name, e] : evals) {
    double se = e.mc->std_error;
    if (name != "asc") {
      // Binomial error at the analytic probability, so an empirical 0 or 1 is not overconfident.
      const double p = e.result.value;
      se = std::max(se, std::sqrt(p * (1.0 - p) / n));
    }
    checks.push_back(upper("mc_" + name, std::abs(e.result.value - e.mc->mean),
                           3.0 * se + e.result.eps_bound));
  }
  const auto sopl0 = sop_lower(tables.main, tables.eaves, 0.0);
  const auto sop0 = sop(tables.main, tables.eaves, 0.0);
  const auto spsc0 = spsc(tables.main, tables.eaves);
  checks.push_back(upper("identity_spsc", std::abs(spsc0.value + sopl0.value - 1.0), 1e-12));
  checks.push_back(upper("identity_rate0", std::abs(sop0.value - sopl0.value), 1e-10));
  {
    const auto& s = evals[1].second.result;
    const auto& l = evals[2].second.result;
    checks.push_back(upper("bound_order", std::max(0.0, l.value - s.value), s.eps_bound + l.eps_bound));
  }

  struct Channel {
    const char* name;
    const CoefficientTable* table;
    std::vector<double>* samples;
  };
  for (const Channel ch : {Channel{"main", &tables.main, &samples.main},
                           Channel{"eaves", &tables.eaves, &samples.eaves}}) {
    const double mean = ch.table->params().mean_snr();
    const auto est = estimate_mean(*ch.samples);
    checks.push_back(upper(std::string("mean_") + ch.name, std::abs(est.mean - mean) / est.std_error, 3.0));

    const auto mass = integrate_half_line([&](double g) { return snr_pdf(*ch.table, g); }, mean, quad);
    numerics_ok = numerics_ok && mass.converged;
    checks.push_back(upper(std::string("mass_") + ch.name, std::abs(mass.value - (1.0 - ch.table->eps())), 1e-8));

    const double d = ks_statistic(*ch.samples, [&](double g) { return snr_cdf(*ch.table, g); });
    checks.push_back(upper(std::string("ks_") + ch.name, d, ks_critical_value(cfg.mc_samples, 0.01)));
  }

  out << "ftrsec validate\n";
  out << "samples: " << cfg.mc_samples << '\n';
  out << "seed: " << cfg.mc_seed << '\n';
  out << "rate_nats: " << g9(rate) << '\n';
  if (opts.perturb_d1 != 1.0) out << "perturb_d1: " << g9(opts.perturb_d1) << '\n';
  for (const auto* t : {&tables.main, &tables.eaves}) {
    const auto& p = t->params();
    out << (t == &tables.main ? "main" : "eaves") << ": m=" << g9(p.m) << " k=" << g9(p.k)
        << " delta=" << g9(p.delta) << " avg_snr_db=" << g9(10.0 * std::log10(p.mean_snr()))
        << " n_trunc=" << t->n_trunc() << " eps=" << fmt("%.6e", t->eps()) << '\n';
  }
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %-14s %-14s %s\n", "check", "observed", "threshold", "status");
  out << line;
  int passed = 0;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-16s %-14.6g %-14.6g %s\n", c.name.c_str(), c.observed,
                  c.threshold, c.pass ? "PASS" : "FAIL");
    out << line;
    passed += c.pass ? 1 : 0;
  }
  const bool all = passed == static_cast<int>(checks.size());
  if (!numerics_ok) out << "numerics: truncation or quadrature did not converge\n";
  out << "result: " << (all && numerics_ok ? "PASS" : "FAIL") << " (" << passed << '/'
      << checks.size() << " checks passed)\n";
  if (!numerics_ok) return kExitNumerics;
  return all ? kExitOk : kExitValidation;
}

namespace {

std::optional<ScenarioConfig> load_with_overrides(const std::string& path, const CLI::Option* seed_opt,
                                                  std::uint64_t seed, const CLI::Option* eps_opt,
                                                  double eps) {
  if (path.empty()) return std::nullopt;
  ScenarioConfig cfg = load_config(path);
  if (seed_opt && seed_opt->count()) cfg.mc_seed = seed;
  if (eps_opt && eps_opt->count()) {
    if (!(eps >= 1e-9 && eps <= 1.0)) throw ConfigError("arguments", 0, "--target-eps must lie in [1e-9, 1]");
    cfg.target_eps = eps;
  }
  return cfg;
}

ScenarioConfig require_config(const std::optional<ScenarioConfig>& cfg) {
  if (!cfg) throw ConfigError("arguments", 0, "--config is required");
  return *cfg;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError(path, 0, "cannot open for writing");
  f << text;
  if (!f) throw ConfigError(path, 0, "write failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy metrics over fluctuating two-ray fading channels", "ftrsec"};
  app.require_subcommand(1);

  std::string config_path;
  std::uint64_t seed = 0;
  double target_eps = 1e-5;
  std::string out_path;
  MetricOptions metric_opts;
  SweepOptions sweep_opts;
  bool gnuplot = false;
  ValidateOptions validate_opts;

  auto common = [&](CLI::App* sub, bool config_required) {
    auto* c = sub->add_option("--config", config_path, "Scenario configuration file");
    if (config_required) c->required();
    sub->add_option("--target-eps", target_eps, "Override numerics.target_eps (>= 1e-9)");
  };

  auto* truncation = app.add_subcommand("truncation", "Series truncation orders per channel");
  common(truncation, false);

  auto* metric = app.add_subcommand("metric", "Evaluate one secrecy metric");
  common(metric, true);
  metric->add_option("--metric", metric_opts.metric, "asc | sop | sopl | spsc")->required();
  metric->add_flag("--oracle", metric_opts.oracle, "Cross-check against numerical quadrature");
  metric->add_flag("--mc", metric_opts.mc, "Add a Monte Carlo estimate");
  auto* metric_seed = metric->add_option("--seed", seed, "Override mc.seed");

  auto* sweep = app.add_subcommand("sweep", "Sweep one scenario variable and emit CSV");
  common(sweep, true);
  sweep->add_option("--var", sweep_opts.var, "gamma_d_db | gamma_e_db | rho_db | rate")->required();
  sweep->add_option("--from", sweep_opts.from, "First sweep value")->required();
  sweep->add_option("--to", sweep_opts.to, "Last sweep value")->required();
  sweep->add_option("--points", sweep_opts.points, "Number of sweep points (>= 2)")->required();
  sweep->add_option("--metric", sweep_opts.metrics, "Comma-separated metrics")
      ->delimiter(',')
      ->required();
  sweep->add_flag("--oracle", sweep_opts.oracle, "Add quadrature oracle column");
  sweep->add_flag("--mc", sweep_opts.mc, "Add Monte Carlo columns");
  auto* sweep_seed = sweep->add_option("--seed", seed, "Override mc.seed");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->add_flag("--gnuplot", gnuplot, "Also write <out>.gp");

  auto* validate = app.add_subcommand("validate", "Analytic vs. oracle vs. Monte Carlo checks");
  common(validate, true);
  auto* validate_seed = validate->add_option("--seed", seed, "Override mc.seed");
  validate->add_option("--out", out_path, "Report output path (default stdout)");
  validate->add_option("--perturb-d1", validate_opts.perturb_d1)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitConfig;
  }

  try {
    const CLI::Option* eps_opt = nullptr;
    for (auto* sub : {truncation, metric, sweep, validate}) {
      if (sub->parsed()) eps_opt = sub->get_option("--target-eps");
    }
    if (truncation->parsed()) {
      const auto cfg = load_with_overrides(config_path, nullptr, 0, nullptr, 0.0);
      return cmd_truncation(cfg, out,
                            eps_opt->count() ? std::optional<double>(target_eps) : std::nullopt);
    }
    if (metric->parsed()) {
      const auto cfg = require_config(load_with_overrides(config_path, metric_seed, seed, eps_opt, target_eps));
      return cmd_metric(cfg, metric_opts, out);
    }
    if (sweep->parsed()) {
      const auto cfg = require_config(load_with_overrides(config_path, sweep_seed, seed, eps_opt, target_eps));
      if (gnuplot && out_path.empty()) throw ConfigError("arguments", 0, "--gnuplot needs --out");
      if (out_path.empty()) return cmd_sweep(cfg, sweep_opts, out);
      std::ostringstream csv;
      const int code = cmd_sweep(cfg, sweep_opts, csv);
      write_file(out_path, csv.str());
      if (gnuplot) write_file(out_path + ".gp", gnuplot_script(sweep_opts, out_path));
      return code;
    }
    if (validate->parsed()) {
      const auto cfg = require_config(load_with_overrides(config_path, validate_seed, seed, eps_opt, target_eps));
      if (out_path.empty()) return cmd_validate(cfg, validate_opts, out);
      std::ostringstream report;
      const int code = cmd_validate(cfg, validate_opts, report);
      write_file(out_path, report.str());
      return code;
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerics;
  }
  return kExitConfig;
}

}  // namespace ftrsec
