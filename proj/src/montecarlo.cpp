#include "qsup/montecarlo.hpp"

#include <cmath>

#include "qsup/fisher.hpp"
#include "qsup/parallel.hpp"
#include "qsup/params.hpp"

namespace qsup {

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index) {
  return mix64(seed ^ (trial_index * 0x9E3779B97F4A7C15ULL + 1ULL));
}

McConfig::McConfig(double t_, double delta_t_, double n_, std::uint64_t shots_,
                   std::uint64_t trials_, std::uint64_t seed_)
    : t(t_), delta_t(delta_t_), n(n_), shots(shots_), trials(trials_),
      seed(seed_) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("McConfig: reference transmission must be in (0, 1)");
  }
  double truth = t + delta_t;
  if (!(truth > 0.0 && truth < 1.0)) {
    throw DomainError("McConfig: true transmission t + delta_t must be in (0, 1)");
  }
  if (!(n > 0.0)) throw DomainError("McConfig: pass count must be > 0");
  if (shots == 0) throw DomainError("McConfig: need at least one shot");
  if (trials == 0) throw DomainError("McConfig: need at least one trial");
}

std::pair<std::uint64_t, std::uint64_t> simulate_counts(
    const McConfig& cfg, std::uint64_t trial_index) {
  // Balanced readout at the operating point: click probability of the +
  // port is (1 + true_t^n) / 2.
  double p_plus = 0.5 * (1.0 + std::pow(cfg.t + cfg.delta_t, cfg.n));
  SplitMix64 rng{trial_seed(cfg.seed, trial_index)};
  std::uint64_t n_plus = 0;
  for (std::uint64_t s = 0; s < cfg.shots; ++s) {
    n_plus += rng.next_unit() < p_plus ? 1u : 0u;
  }
  return {n_plus, cfg.shots - n_plus};
}

DeltaTEstimate estimate_delta_t(std::uint64_t n_plus, std::uint64_t n_minus,
                                std::uint64_t shots, double t, double n) {
  if (shots == 0 || n_plus + n_minus != shots) {
    throw DomainError("estimate_delta_t: counts do not add up to shots");
  }
  double s = (static_cast<double>(n_plus) - static_cast<double>(n_minus)) /
             static_cast<double>(shots);
  double inv_n = 1.0 / n;
  if (s >= 0.0) {
    return {std::pow(s, inv_n) - t, false};
  }
  // Negative frequency: s^{1/n} is real only when 1/n is an integer (odd
  // powers keep the sign, even powers discard it); otherwise clamp to s = 0.
  double rounded = std::round(inv_n);
  if (std::abs(inv_n - rounded) < 1e-9 && rounded >= 1.0) {
    long k = static_cast<long>(rounded);
    double mag = std::pow(-s, static_cast<double>(k));
    return {(k % 2 == 0 ? mag : -mag) - t, false};
  }
  return {-t, true};
}

McResult run_histogram(const McConfig& cfg) {
  McResult result;
  result.errors.assign(cfg.trials, 0.0);
  std::vector<unsigned char> clamped(cfg.trials, 0);
  parallel_for(cfg.trials, [&](std::size_t i) {
    auto [n_plus, n_minus] = simulate_counts(cfg, i);
    DeltaTEstimate est =
        estimate_delta_t(n_plus, n_minus, cfg.shots, cfg.t, cfg.n);
    result.errors[i] = cfg.delta_t - est.value;
    clamped[i] = est.clamped ? 1 : 0;
  });

  double mean = 0.0;
  for (double e : result.errors) mean += e;
  mean /= static_cast<double>(cfg.trials);
  double m2 = 0.0, m3 = 0.0;
  for (double e : result.errors) {
    double d = e - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  double trials = static_cast<double>(cfg.trials);
  result.sample_std = cfg.trials > 1 ? std::sqrt(m2 / (trials - 1.0)) : 0.0;
  double pop_var = m2 / trials;
  result.skewness =
      pop_var > 0.0 ? (m3 / trials) / std::pow(pop_var, 1.5) : 0.0;
  result.clamped_trials = 0;
  for (unsigned char c : clamped) result.clamped_trials += c;

  result.predicted_std =
      1.0 / std::sqrt(static_cast<double>(cfg.shots) *
                      qfi_matrix(SampleParams(cfg.t, 0.0, cfg.n))(0, 0));
  return result;
}

}  // namespace qsup
