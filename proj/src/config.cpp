// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <sstream>

namespace ftrsec {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("expected a finite number, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_count(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc() && ptr == end) return v;
  // Also accept exact integers written in floating notation, e.g. 1e6.
  const double d = parse_real(text);
  if (d < 0.0 || d > 9.0e15 || d != std::floor(d)) {
    throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::uint64_t>(d);
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

using Setter = std::function<void(ScenarioConfig&, const std::string&)>;

void add_channel_keys(std::map<std::string, Setter>& keys, const std::string& prefix,
                      ChannelConfig ScenarioConfig::*member) {
  keys[prefix + ".m"] = [member](ScenarioConfig& c, const std::string& v) {
    const double x = parse_real(v);
    require(x > 0.0, "m must be positive");
    (c.*member).m = x;
  };
  keys[prefix + ".k"] = [member](ScenarioConfig& c, const std::string& v) {
    const double x = parse_real(v);
    require(x >= 0.0, "k must be nonnegative");
    (c.*member).k = x;
  };
  keys[prefix + ".delta"] = [member](ScenarioConfig& c, const std::string& v) {
    const double x = parse_real(v);
    require(x >= 0.0 && x <= 1.0, "delta must lie in [0, 1]");
    (c.*member).delta = x;
  };
  keys[prefix + ".sigma2"] = [member](ScenarioConfig& c, const std::string& v) {
    const double x = parse_real(v);
    require(x > 0.0, "sigma2 must be positive");
    require(!(c.*member).avg_snr_db, "sigma2 and avg_snr_db are mutually exclusive");
    (c.*member).sigma2 = x;
  };
  keys[prefix + ".avg_snr_db"] = [member](ScenarioConfig& c, const std::string& v) {
    const double x = parse_real(v);
    require(!(c.*member).sigma2, "sigma2 and avg_snr_db are mutually exclusive");
    (c.*member).avg_snr_db = x;
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> keys = [] {
    std::map<std::string, Setter> k;
    add_channel_keys(k, "main", &ScenarioConfig::main);
    add_channel_keys(k, "eaves", &ScenarioConfig::eaves);
    k["budget.eb_n0_db"] = [](ScenarioConfig& c, const std::string& v) {
      c.eb_n0_db = parse_real(v);
    };
    k["budget.r"] = [](ScenarioConfig& c, const std::string& v) {
      c.r = parse_real(v);
      require(c.r > 0.0, "r must be positive");
    };
    k["budget.eta"] = [](ScenarioConfig& c, const std::string& v) {
      c.eta = parse_real(v);
      require(c.eta > 0.0, "eta must be positive");
    };
    k["budget.r_los"] = [](ScenarioConfig& c, const std::string& v) {
      c.r_los = parse_real(v);
      require(c.r_los > 0.0, "r_los must be positive");
    };
    k["rate.value"] = [](ScenarioConfig& c, const std::string& v) {
      const double x = parse_real(v);
      require(x >= 0.0, "rate must be nonnegative");
      c.rate_value = x;
    };
    k["rate.unit"] = [](ScenarioConfig& c, const std::string& v) {
      if (v == "bits") {
        c.rate_unit = RateUnit::bits;
      } else if (v == "nats") {
        c.rate_unit = RateUnit::nats;
      } else {
        throw std::invalid_argument("rate.unit must be 'bits' or 'nats', got '" + v + "'");
      }
    };
    k["numerics.target_eps"] = [](ScenarioConfig& c, const std::string& v) {
      c.target_eps = parse_real(v);
      require(c.target_eps >= 1e-9 && c.target_eps <= 1.0, "target_eps must lie in [1e-9, 1]");
    };
    k["numerics.n_max"] = [](ScenarioConfig& c, const std::string& v) {
      const auto n = parse_count(v);
      require(n >= 1 && n <= 5000, "n_max must lie in [1, 5000]");
      c.n_max = static_cast<int>(n);
    };
    k["numerics.quad_rel_tol"] = [](ScenarioConfig& c, const std::string& v) {
      c.quad_rel_tol = parse_real(v);
      require(c.quad_rel_tol > 0.0 && c.quad_rel_tol < 1e-3, "quad_rel_tol must lie in (0, 1e-3)");
    };
    k["mc.samples"] = [](ScenarioConfig& c, const std::string& v) {
      c.mc_samples = parse_count(v);
      require(c.mc_samples >= 1, "mc.samples must be positive");
    };
    k["mc.seed"] = [](ScenarioConfig& c, const std::string& v) { c.mc_seed = parse_count(v); };
    return k;
  }();
  return keys;
}

void validate_channel(const ScenarioConfig& cfg, const ChannelConfig& ch) {
  if (ch.sigma2.has_value() == ch.avg_snr_db.has_value()) {
    throw std::invalid_argument("exactly one of sigma2 or avg_snr_db is required");
  }
  cfg.physical(ch).validate();
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(line > 0 ? source + ":" + std::to_string(line) + ": " + message
                                  : source + ": " + message),
      line_(line) {}

LinkBudget ScenarioConfig::budget() const {
  return {std::pow(10.0, eb_n0_db / 10.0), r, eta, r_los};
}

FtrParams ScenarioConfig::physical(const ChannelConfig& ch) const {
  FtrParams p{ch.m, ch.k, ch.delta, 0.0};
  if (ch.sigma2) {
    p.sigma2 = *ch.sigma2;
  } else if (ch.avg_snr_db) {
    p.sigma2 = sigma2_for_average_snr(std::pow(10.0, *ch.avg_snr_db / 10.0), ch.k, budget());
  } else {
    throw std::invalid_argument("channel has neither sigma2 nor avg_snr_db");
  }
  return p;
}

FtrParams ScenarioConfig::snr_params(const ChannelConfig& ch) const {
  return snr_domain(physical(ch), budget());
}

double ScenarioConfig::average_snr_db(const ChannelConfig& ch) const {
  if (ch.avg_snr_db) return *ch.avg_snr_db;
  return 10.0 * std::log10(average_snr(physical(ch), budget()));
}

double ScenarioConfig::rate_nats() const {
  return rate_value ? rate_unit_convert(*rate_value, rate_unit) : 0.0;
}

WiretapScenario ScenarioConfig::scenario() const {
  return {snr_params(main), snr_params(eaves), rate_nats()};
}

WiretapScenario ScenarioConfig::physical_scenario() const {
  return {physical(main), physical(eaves), rate_nats()};
}

TruncationTargets ScenarioConfig::targets() const { return {target_eps, target_eps, n_max}; }

QuadratureOptions ScenarioConfig::quadrature() const {
  QuadratureOptions q;
  q.rel_tol = quad_rel_tol;
  return q;
}

SampleConfig ScenarioConfig::sampling() const {
  SampleConfig s;
  s.n_samples = mc_samples;
  s.seed = mc_seed;
  return s;
}

void ScenarioConfig::validate(const std::string& source) const {
  try {
    budget().validate();
    validate_channel(*this, main);
    validate_channel(*this, eaves);
    require(target_eps >= 1e-9 && target_eps <= 1.0, "target_eps must lie in [1e-9, 1]");
    require(n_max >= 1, "n_max must be positive");
    require(quad_rel_tol > 0.0 && quad_rel_tol < 1e-3, "quad_rel_tol must lie in (0, 1e-3)");
    require(mc_samples >= 1, "mc.samples must be positive");
    if (rate_value) require(*rate_value >= 0.0, "rate must be nonnegative");
  } catch (const std::exception& e) {
    throw ConfigError(source, 0, e.what());
  }
}

ScenarioConfig parse_config(std::istream& in, const std::string& source) {
  ScenarioConfig cfg;
  std::map<std::string, int> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(source, line_no, "expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) throw ConfigError(source, line_no, "empty key");
    if (value.empty()) throw ConfigError(source, line_no, "missing value for '" + key + "'");
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError(source, line_no, "unknown key '" + key + "'");
    if (const auto prev = seen.find(key); prev != seen.end()) {
      throw ConfigError(source, line_no,
                        "duplicate key '" + key + "' (first set on line " +
                            std::to_string(prev->second) + ")");
    }
    seen[key] = line_no;
    try {
      it->second(cfg, value);
    } catch (const std::exception& e) {
      throw ConfigError(source, line_no, key + ": " + e.what());
    }
  }

  for (const char* key : {"main.m", "main.k", "main.delta", "eaves.m", "eaves.k", "eaves.delta"}) {
    if (!seen.count(key)) throw ConfigError(source, 0, std::string("missing required key '") + key + "'");
  }
  for (const std::string prefix : {"main", "eaves"}) {
    if (!seen.count(prefix + ".sigma2") && !seen.count(prefix + ".avg_snr_db")) {
      throw ConfigError(source, 0, "missing '" + prefix + ".sigma2' or '" + prefix + ".avg_snr_db'");
    }
  }
  // Cross-field rules are reported at the last line involved.
  auto line_of = [&](std::initializer_list<const char*> keys) {
    int l = 0;
    for (const char* k : keys) {
      if (auto it = seen.find(k); it != seen.end()) l = std::max(l, it->second);
    }
    return l;
  };
  try {
    cfg.budget().validate();
  } catch (const std::exception& e) {
    throw ConfigError(source, line_of({"budget.r", "budget.r_los"}), e.what());
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path.string(), 0, "cannot open file");
  return parse_config(in, path.string());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  auto channel = [&](const std::string& prefix, const ChannelConfig& ch) {
    out << prefix << ".m = " << format_real(ch.m) << '\n';
    out << prefix << ".k = " << format_real(ch.k) << '\n';
    out << prefix << ".delta = " << format_real(ch.delta) << '\n';
    if (ch.sigma2) out << prefix << ".sigma2 = " << format_real(*ch.sigma2) << '\n';
    if (ch.avg_snr_db) out << prefix << ".avg_snr_db = " << format_real(*ch.avg_snr_db) << '\n';
  };
  channel("main", cfg.main);
  channel("eaves", cfg.eaves);
  out << "budget.eb_n0_db = " << format_real(cfg.eb_n0_db) << '\n';
  out << "budget.r = " << format_real(cfg.r) << '\n';
  out << "budget.eta = " << format_real(cfg.eta) << '\n';
  out << "budget.r_los = " << format_real(cfg.r_los) << '\n';
  if (cfg.rate_value) out << "rate.value = " << format_real(*cfg.rate_value) << '\n';
  out << "rate.unit = " << (cfg.rate_unit == RateUnit::bits ? "bits" : "nats") << '\n';
  out << "numerics.target_eps = " << format_real(cfg.target_eps) << '\n';
  out << "numerics.n_max = " << cfg.n_max << '\n';
  out << "numerics.quad_rel_tol = " << format_real(cfg.quad_rel_tol) << '\n';
  out << "mc.samples = " << cfg.mc_samples << '\n';
  out << "mc.seed = " << cfg.mc_seed << '\n';
  return out.str();
}

}  // namespace ftrsec
