// SPDX-License-Identifier: Apache-2.0
//
// Generative FTR simulator. Each draw builds the received signal from its
// physical ingredients,
//
//   g = gain * | sqrt(z) (V1 e^{i p1} + V2 e^{i p2}) + Z |^2,
//
// with z ~ Gamma(m, 1/m) (unit mean), p1, p2 ~ U[0, 2 pi), Z circular complex
// Gaussian with per-component variance sigma^2, and
// V1^2, V2^2 = sigma^2 K (1 +- sqrt(1 - delta^2)).
//
// Samples are produced in fixed-size batches, each with its own generator
// seeded from (seed, stream, batch index). Output is therefore identical
// for any number of worker threads.
#pragma once

#include "ftrsec/compensated_sum.hpp"
#include "ftrsec/ftr_model.hpp"
#include "ftrsec/secrecy.hpp"

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace ftrsec {

struct SampleConfig {
  std::uint64_t n_samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t batch = 1 << 16;

  /// Throws std::invalid_argument on zero counts, or when `for_acceptance`
  /// and n_samples < 10^4.
  void validate(bool for_acceptance = false) const;
};

struct EstimateWithError {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
};

/// Streaming mean/variance with associative merging of partial
/// (count, mean, M2) triples. The mean comes from a compensated running sum;
/// M2 follows Welford's update.
class RunningStats {
 public:
  void add(double x) {
    const double before = mean();
    ++n_;
    sum_ += x;
    m2_ += (x - before) * (x - mean());
  }
  void merge(const RunningStats& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return n_ > 0 ? sum_.value() / static_cast<double>(n_) : 0.0; }
  /// Unbiased sample variance.
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }
  EstimateWithError estimate() const;

 private:
  std::uint64_t n_ = 0;
  CompensatedSum<> sum_;
  double m2_ = 0.0;
};

/// splitmix64-based seed derivation for (seed, stream, batch).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t batch);

class FtrSampler {
 public:
  explicit FtrSampler(const FtrParams& params, const LinkBudget& budget = {});

  template <typename Rng>
  double operator()(Rng& rng) {
    const double z = fluctuation_(rng);
    const double p1 = phase_(rng);
    const double p2 = phase_(rng);
    const double amp = std::sqrt(z);
    const double re = amp * (v1_ * std::cos(p1) + v2_ * std::cos(p2)) + diffuse_(rng);
    const double im = amp * (v1_ * std::sin(p1) + v2_ * std::sin(p2)) + diffuse_(rng);
    return gain_ * (re * re + im * im);
  }

 private:
  double v1_;
  double v2_;
  double gain_;
  std::gamma_distribution<double> fluctuation_;
  std::uniform_real_distribution<double> phase_{0.0, 2.0 * std::numbers::pi};
  std::normal_distribution<double> diffuse_;
};

/// Stream ids used for the two channels of a wiretap simulation.
inline constexpr std::uint64_t kMainStream = 1;
inline constexpr std::uint64_t kEavesStream = 2;

std::vector<double> sample_snr(const FtrParams& params, const LinkBudget& budget,
                               const SampleConfig& cfg, std::uint64_t stream = kMainStream);

struct WiretapSamples {
  std::vector<double> main;
  std::vector<double> eaves;
};

/// Independent draws for both channels (scenario parameters are in SNR
/// units, so the budgets default to unit gain).
WiretapSamples sample_wiretap(const WiretapScenario& scenario, const SampleConfig& cfg,
                              const LinkBudget& main_budget = {},
                              const LinkBudget& eaves_budget = {});

EstimateWithError estimate_mean(const std::vector<double>& samples);
/// Mean of max(ln(1+g_D) - ln(1+g_E), 0).
EstimateWithError estimate_asc(const WiretapSamples& s);
/// Fraction with g_D < theta g_E + theta - 1.
EstimateWithError estimate_sop(const WiretapSamples& s, double rate_nats);
/// Fraction with g_D < theta g_E.
EstimateWithError estimate_sop_lower(const WiretapSamples& s, double rate_nats);
/// Fraction with g_D > g_E.
EstimateWithError estimate_spsc(const WiretapSamples& s);

EstimateWithError estimate_asc(const WiretapScenario& scenario, const SampleConfig& cfg);
EstimateWithError estimate_sop(const WiretapScenario& scenario, const SampleConfig& cfg);
EstimateWithError estimate_spsc(const WiretapScenario& scenario, const SampleConfig& cfg);

/// sup_x |F_n(x) - F(x)|; sorts `samples` in place.
double ks_statistic(std::vector<double>& samples, const std::function<double(double)>& cdf);

/// Asymptotic one-sample critical value sqrt(-ln(alpha/2) / 2) / sqrt(n).
double ks_critical_value(std::uint64_t n, double alpha = 0.01);

}  // namespace ftrsec
