// SPDX-License-Identifier: Apache-2.0
#include "ftrsec/monte_carlo.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ftrsec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

EstimateWithError proportion(std::uint64_t hits, std::uint64_t n) {
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n};
}

void check_paired(const WiretapSamples& s) {
  if (s.main.empty() || s.main.size() != s.eaves.size()) {
    throw std::invalid_argument("wiretap samples must be nonempty and of equal length");
  }
}

}  // namespace

void SampleConfig::validate(bool for_acceptance) const {
  if (n_samples == 0) throw std::invalid_argument("SampleConfig: n_samples must be positive");
  if (batch == 0) throw std::invalid_argument("SampleConfig: batch must be positive");
  if (for_acceptance && n_samples < 10'000) {
    throw std::invalid_argument("SampleConfig: at least 10^4 samples are required");
  }
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double d = other.mean() - mean();
  m2_ += other.m2_ + d * d * na * nb / (na + nb);
  sum_ += other.sum_.value();
  n_ += other.n_;
}

EstimateWithError RunningStats::estimate() const {
  return {mean(), n_ > 0 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0, n_};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t batch) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ (batch * 0xD1B54A32D192ED03ULL));
}

FtrSampler::FtrSampler(const FtrParams& params, const LinkBudget& budget)
    : fluctuation_(params.m, 1.0 / params.m), diffuse_(0.0, std::sqrt(params.sigma2)) {
  params.validate();
  budget.validate();
  const double root = std::sqrt(1.0 - params.delta * params.delta);
  v1_ = std::sqrt(params.sigma2 * params.k * (1.0 + root));
  v2_ = std::sqrt(std::max(0.0, params.sigma2 * params.k * (1.0 - root)));
  gain_ = budget.gain();
}

std::vector<double> sample_snr(const FtrParams& params, const LinkBudget& budget,
                               const SampleConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  std::vector<double> out(cfg.n_samples);
  const std::uint64_t n_batches = (cfg.n_samples + cfg.batch - 1) / cfg.batch;
  auto run_batch = [&](std::uint64_t b) {
    std::mt19937_64 rng(derive_seed(cfg.seed, stream, b));
    FtrSampler sampler(params, budget);
    const std::uint64_t begin = b * cfg.batch;
    const std::uint64_t end = std::min(cfg.n_samples, begin + cfg.batch);
    for (std::uint64_t i = begin; i < end; ++i) out[i] = sampler(rng);
  };

  const auto workers = static_cast<std::uint64_t>(
      std::max(1u, std::min(std::thread::hardware_concurrency(), 16u)));
  if (workers == 1 || n_batches == 1) {
    for (std::uint64_t b = 0; b < n_batches; ++b) run_batch(b);
    return out;
  }
  std::vector<std::jthread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t b = w; b < n_batches; b += workers) run_batch(b);
    });
  }
  pool.clear();
  return out;
}

WiretapSamples sample_wiretap(const WiretapScenario& scenario, const SampleConfig& cfg,
                              const LinkBudget& main_budget, const LinkBudget& eaves_budget) {
  scenario.validate();
  return {sample_snr(scenario.main, main_budget, cfg, kMainStream),
          sample_snr(scenario.eaves, eaves_budget, cfg, kEavesStream)};
}

EstimateWithError estimate_mean(const std::vector<double>& samples) {
  RunningStats stats;
  for (double x : samples) stats.add(x);
  return stats.estimate();
}

EstimateWithError estimate_asc(const WiretapSamples& s) {
  check_paired(s);
  RunningStats stats;
  for (std::size_t i = 0; i < s.main.size(); ++i) {
    stats.add(std::max(std::log1p(s.main[i]) - std::log1p(s.eaves[i]), 0.0));
  }
  return stats.estimate();
}

EstimateWithError estimate_sop(const WiretapSamples& s, double rate_nats) {
  check_paired(s);
  const double theta = std::exp(rate_nats);
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < s.main.size(); ++i) {
    if (s.main[i] < theta * s.eaves[i] + theta - 1.0) ++hits;
  }
  return proportion(hits, s.main.size());
}

EstimateWithError estimate_sop_lower(const WiretapSamples& s, double rate_nats) {
  check_paired(s);
  const double theta = std::exp(rate_nats);
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < s.main.size(); ++i) {
    if (s.main[i] < theta * s.eaves[i]) ++hits;
  }
  return proportion(hits, s.main.size());
}

EstimateWithError estimate_spsc(const WiretapSamples& s) {
  check_paired(s);
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < s.main.size(); ++i) {
    if (s.main[i] > s.eaves[i]) ++hits;
  }
  return proportion(hits, s.main.size());
}

EstimateWithError estimate_asc(const WiretapScenario& scenario, const SampleConfig& cfg) {
  return estimate_asc(sample_wiretap(scenario, cfg));
}

EstimateWithError estimate_sop(const WiretapScenario& scenario, const SampleConfig& cfg) {
  return estimate_sop(sample_wiretap(scenario, cfg), scenario.rate_nats);
}

EstimateWithError estimate_spsc(const WiretapScenario& scenario, const SampleConfig& cfg) {
  return estimate_spsc(sample_wiretap(scenario, cfg));
}

double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_statistic: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    const double below = f - static_cast<double>(i) / n;
    const double above = static_cast<double>(i + 1) / n - f;
    d = std::max({d, below, above});
  }
  return d;
}

double ks_critical_value(std::uint64_t n, double alpha) {
  if (n == 0) throw std::invalid_argument("ks_critical_value: n must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical_value: bad alpha");
  return std::sqrt(-0.5 * std::log(alpha / 2.0)) / std::sqrt(static_cast<double>(n));
}

}  // namespace ftrsec
