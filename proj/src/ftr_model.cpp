// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/ftr_model.hpp"

#include "ftrsec/compensated_sum.hpp"
#include "ftrsec/special_functions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ftrsec {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Gauss-Legendre rule on [-1, 1] by Newton iteration on P_n.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule make_gauss_legendre(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -z;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

// Node counts 32, 64, ..., 4096.
constexpr int kFirstLevelNodes = 32;
constexpr int kLevels = 8;

const GaussLegendreRule& gauss_legendre_level(int level) {
  static std::array<GaussLegendreRule, kLevels> rules;
  static std::array<std::once_flag, kLevels> flags;
  const auto idx = static_cast<std::size_t>(level);
  std::call_once(flags[idx], [&] { rules[idx] = make_gauss_legendre(kFirstLevelNodes << level); });
  return rules[idx];
}

double compute_log_d(double m, double k, double delta, int j) {
  // Integrand exponent as a function of u = 1 + delta cos(theta). It peaks
  // at u = j / K, clamped to the attainable range; using that peak as the
  // shift keeps every exponentiated value in (0, 1].
  auto exponent = [=](double u) {
    const double lead = j == 0 ? 0.0 : (u > 0.0 ? j * std::log(u) : kNegInf);
    return lead - (m + j) * std::log(m + k * u);
  };
  const double lo = 1.0 - delta;
  const double hi = 1.0 + delta;
  const double u_peak = k > 0.0 ? std::clamp(j / k, lo, hi) : hi;
  const double shift = exponent(u_peak);

  // (1/pi) int_0^pi exp(g(theta) - shift) dtheta
  auto level_integral = [&](int level) {
    const auto& rule = gauss_legendre_level(level);
    CompensatedSum<> acc;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double theta = 0.5 * std::numbers::pi * (rule.nodes[i] + 1.0);
      acc += rule.weights[i] * std::exp(exponent(1.0 + delta * std::cos(theta)) - shift);
    }
    return 0.5 * acc.value();
  };

  double prev = level_integral(0);
  double current = prev;
  for (int level = 1; level < kLevels; ++level) {
    current = level_integral(level);
    if (std::abs(current - prev) <= 1e-12 * std::abs(current)) break;
    prev = current;
  }
  return std::lgamma(m + j) + shift + std::log(current);
}

using CacheKey = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>;

CacheKey cache_key(const FtrParams& p) {
  return {std::bit_cast<std::uint64_t>(p.m), std::bit_cast<std::uint64_t>(p.k),
          std::bit_cast<std::uint64_t>(p.delta)};
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::map<CacheKey, std::vector<double>>& cache() {
  static std::map<CacheKey, std::vector<double>> c;
  return c;
}

// ln d_0 .. ln d_n, extending the shared memo as needed. Values are a pure
// function of the key, so a race between two extenders is harmless.
std::vector<double> log_d_prefix(const FtrParams& p, int n) {
  const auto key = cache_key(p);
  std::vector<double> have;
  {
    std::lock_guard lock(cache_mutex());
    auto it = cache().find(key);
    if (it != cache().end()) have = it->second;
  }
  if (static_cast<int>(have.size()) > n) {
    have.resize(static_cast<std::size_t>(n + 1));
    return have;
  }
  for (int j = static_cast<int>(have.size()); j <= n; ++j) {
    have.push_back(compute_log_d(p.m, p.k, p.delta, j));
  }
  {
    std::lock_guard lock(cache_mutex());
    auto& slot = cache()[key];
    if (slot.size() < have.size()) slot = have;
  }
  return have;
}

double log_weight(const FtrParams& p, int j, double log_d) {
  if (j > 0 && p.k == 0.0) return kNegInf;  // 0^0 = 1, 0^j = 0
  const double lk = j > 0 ? j * std::log(p.k) : 0.0;
  return p.m * std::log(p.m) - std::lgamma(p.m) + lk + log_d - std::lgamma(j + 1.0);
}

double clamp_eps(double eps) { return (eps < 0.0 && eps > -1e-12) ? 0.0 : eps; }

double eps_from_weights(const std::vector<double>& w, int n) {
  CompensatedSum<> s(1.0);
  for (int j = 0; j <= n; ++j) s -= w[static_cast<std::size_t>(j)];
  return clamp_eps(s.value());
}

}  // namespace

void FtrParams::validate() const {
  std::ostringstream err;
  if (!(m > 0.0) || !std::isfinite(m)) err << "m must be positive; ";
  if (!(k >= 0.0) || !std::isfinite(k)) err << "K must be nonnegative; ";
  if (!(delta >= 0.0 && delta <= 1.0)) err << "delta must lie in [0, 1]; ";
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) err << "sigma2 must be positive; ";
  const auto msg = err.str();
  if (!msg.empty()) throw std::invalid_argument("FtrParams: " + msg.substr(0, msg.size() - 2));
}

std::vector<std::string> LinkBudget::validate() const {
  if (!(eb_n0 > 0.0)) throw std::invalid_argument("LinkBudget: eb_n0 must be positive");
  if (!(r > 0.0)) throw std::invalid_argument("LinkBudget: r must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("LinkBudget: eta must be positive");
  if (!(r_los > 0.0)) throw std::invalid_argument("LinkBudget: r_los must be positive");
  if (r > r_los) throw std::domain_error("LinkBudget: r lies outside the LOS ball (r > r_los)");
  std::vector<std::string> warnings;
  if (eta < 1.5 || eta > 8.0) {
    warnings.push_back("path-loss exponent outside the usual [1.5, 8] range");
  }
  return warnings;
}

double LinkBudget::gain() const { return eb_n0 * std::pow(r, -eta); }

double average_snr(const FtrParams& params, const LinkBudget& budget) {
  params.validate();
  budget.validate();
  return budget.gain() * params.mean_snr();
}

double sigma2_for_average_snr(double avg_snr, double k, const LinkBudget& budget) {
  if (!(avg_snr > 0.0)) throw std::domain_error("average SNR must be positive");
  if (!(k >= 0.0)) throw std::invalid_argument("K must be nonnegative");
  budget.validate();
  return avg_snr * std::pow(budget.r, budget.eta) / (2.0 * budget.eb_n0 * (1.0 + k));
}

FtrParams snr_domain(const FtrParams& params, const LinkBudget& budget) {
  params.validate();
  budget.validate();
  FtrParams out = params;
  out.sigma2 = params.sigma2 * budget.gain();
  return out;
}

double log_d_coefficient(const FtrParams& params, int j) {
  params.validate();
  if (j < 0) throw std::out_of_range("d_coefficient: j must be nonnegative");
  return log_d_prefix(params, j).back();
}

double d_coefficient(const FtrParams& params, int j) {
  return std::exp(log_d_coefficient(params, j));
}

CoefficientTable::CoefficientTable(const FtrParams& params, int n_trunc) : params_(params) {
  params.validate();
  if (n_trunc < 0) throw std::out_of_range("CoefficientTable: n_trunc must be nonnegative");
  log_d_ = log_d_prefix(params, n_trunc);
  weights_.reserve(log_d_.size());
  for (int j = 0; j <= n_trunc; ++j) {
    weights_.push_back(std::exp(log_weight(params, j, log_d_[static_cast<std::size_t>(j)])));
  }
  target_eps_ = eps();
}

double CoefficientTable::eps() const { return eps_from_weights(weights_, n_trunc()); }

double CoefficientTable::log_d(int j) const {
  if (j < 0 || j > n_trunc()) throw std::out_of_range("CoefficientTable: index out of range");
  return log_d_[static_cast<std::size_t>(j)];
}

double CoefficientTable::d(int j) const { return std::exp(log_d(j)); }

std::vector<double> CoefficientTable::d() const {
  std::vector<double> out;
  out.reserve(log_d_.size());
  for (double l : log_d_) out.push_back(std::exp(l));
  return out;
}

CoefficientTable CoefficientTable::with_sigma2(double sigma2) const {
  CoefficientTable out = *this;
  out.params_.sigma2 = sigma2;
  out.params_.validate();
  return out;
}

CoefficientTable CoefficientTable::with_scaled_coefficient(int j, double factor) const {
  if (j < 0 || j > n_trunc()) throw std::out_of_range("CoefficientTable: index out of range");
  if (!(factor > 0.0)) throw std::invalid_argument("CoefficientTable: factor must be positive");
  CoefficientTable out = *this;
  const auto idx = static_cast<std::size_t>(j);
  out.log_d_[idx] += std::log(factor);
  out.weights_[idx] *= factor;
  return out;
}

CoefficientTable build_coefficient_table(const FtrParams& params, double target_eps, int n_max) {
  params.validate();
  if (!(target_eps > 0.0 && target_eps <= 1.0)) {
    throw std::invalid_argument("build_coefficient_table: target_eps must lie in (0, 1]");
  }
  if (n_max < 1) throw std::invalid_argument("build_coefficient_table: n_max must be >= 1");

  CoefficientTable table;
  table.params_ = params;
  table.target_eps_ = target_eps;
  CompensatedSum<> remaining(1.0);

  // Extend the memo in chunks so a cold cache does not compute up to n_max.
  int have = 0;
  std::vector<double> log_d;
  for (int j = 0; j <= n_max; ++j) {
    if (j >= have) {
      have = std::min(n_max + 1, std::max(2 * have, 16));
      log_d = log_d_prefix(params, have - 1);
    }
    const double ld = log_d[static_cast<std::size_t>(j)];
    const double w = std::exp(log_weight(params, j, ld));
    table.log_d_.push_back(ld);
    table.weights_.push_back(w);
    remaining -= w;
    if (clamp_eps(remaining.value()) <= target_eps) {
      table.converged_ = true;
      return table;
    }
  }
  table.converged_ = false;
  return table;
}

double truncation_error(const CoefficientTable& table, int n) {
  if (n < 0 || n > table.n_trunc()) {
    throw std::out_of_range("truncation_error: n exceeds the table length");
  }
  return eps_from_weights(table.weights(), n);
}

double snr_pdf(const CoefficientTable& table, double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("snr_pdf: gamma must be nonnegative");
  const double scale = 2.0 * table.params().sigma2;
  const double x = gamma / scale;
  const auto& w = table.weights();
  if (x == 0.0) return w[0] / scale;
  if (std::isinf(x)) return 0.0;
  const double log_x = std::log(x);
  CompensatedSum<> sum;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0.0) continue;
    const double jd = static_cast<double>(j);
    sum += w[j] * std::exp(jd * log_x - x - std::lgamma(jd + 1.0));
  }
  return sum.value() / scale;
}

double snr_cdf(const CoefficientTable& table, double gamma) {
  if (!(gamma >= 0.0)) throw std::domain_error("snr_cdf: gamma must be nonnegative");
  const double x = gamma / (2.0 * table.params().sigma2);
  if (x == 0.0) return 0.0;
  const auto& w = table.weights();
  const int n = table.n_trunc();
  if (std::isinf(x)) return std::clamp(1.0 - table.eps(), 0.0, 1.0);
  const double log_x = std::log(x);
  auto poisson_term = [&](int j) { return std::exp(j * log_x - x - std::lgamma(j + 1.0)); };

  CompensatedSum<> mass;
  CompensatedSum<> mean_index;
  for (int j = 0; j <= n; ++j) {
    mass += w[static_cast<std::size_t>(j)];
    mean_index += w[static_cast<std::size_t>(j)] * (j + 1.0);
  }
  CompensatedSum<> sum;
  if (x <= mean_index.value()) {
    // P(j+1, x) for j = n, n-1, ..., 0 by the downward recurrence
    // P(j, x) = P(j+1, x) + e^-x x^j / j!, which only ever adds positive terms.
    double p = regularized_lower_gamma(n + 1.0, x);
    for (int j = n; j >= 0; --j) {
      sum += w[static_cast<std::size_t>(j)] * p;
      p += poisson_term(j);
    }
  } else {
    // Upper tail: total mass minus sum_j c_j Q(j+1, x), with
    // Q(j+1, x) = e^-x sum_{k<=j} x^k / k! built upward. The error then
    // scales with the tail mass rather than with 1.
    double q = 0.0;
    CompensatedSum<> tail;
    for (int j = 0; j <= n; ++j) {
      q += poisson_term(j);
      tail += w[static_cast<std::size_t>(j)] * std::min(q, 1.0);
    }
    sum += mass.value();
    sum -= tail.value();
  }
  return std::clamp(sum.value(), 0.0, 1.0);
}

}  // namespace ftrsec
