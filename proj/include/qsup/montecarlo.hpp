#ifndef QSUP_MONTECARLO_HPP
#define QSUP_MONTECARLO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qsup/common.hpp"

namespace qsup {

// splitmix64: tiny counter-based generator.  Used both as the shot-level RNG
// and (via its output function mix64) to derive independent per-trial seeds,
// which makes every trial reproducible regardless of scheduling.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// splitmix64 output function as a standalone 64-bit mixer.
std::uint64_t mix64(std::uint64_t x);

// Seed of the shot RNG of one trial.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial_index);

// One simulated experiment: `shots` two-outcome detections per trial at true
// transmission t + delta_t, estimating the deviation delta_t from the
// outcome frequencies.
struct McConfig {
  double t;             // reference transmission (estimator baseline)
  double delta_t;       // true deviation; t + delta_t must stay in (0, 1)
  double n;             // pass count
  std::uint64_t shots;  // detections per trial
  std::uint64_t trials; // independent repetitions
  std::uint64_t seed;   // base seed; trial i uses trial_seed(seed, i)

  McConfig(double t_, double delta_t_, double n_, std::uint64_t shots_,
           std::uint64_t trials_, std::uint64_t seed_);
};

// Estimate of the transmission deviation from one trial's counts.
struct DeltaTEstimate {
  double value;
  bool clamped;  // true when a negative frequency was clamped to s = 0
};

// Summary of a histogram run.
struct McResult {
  std::vector<double> errors;  // delta_t - estimate, by trial index
  double sample_std;           // (trials - 1)-denominator standard deviation
  double predicted_std;        // 1 / sqrt(shots * F_Q(t, n))
  double skewness;             // standardised third moment of the errors
  std::uint64_t clamped_trials;
};

// Counts (n_plus, n_minus) of one trial, from shot-by-shot Bernoulli draws
// with click probability (1 + (t + delta_t)^n) / 2.
std::pair<std::uint64_t, std::uint64_t> simulate_counts(
    const McConfig& cfg, std::uint64_t trial_index);

// Inverts s = (n_plus - n_minus) / shots through delta_t = s^{1/n} - t.
// Negative s is valid when 1/n is an integer power; otherwise s is clamped
// to 0 and the estimate flagged.
DeltaTEstimate estimate_delta_t(std::uint64_t n_plus, std::uint64_t n_minus,
                                std::uint64_t shots, double t, double n);

// Runs all trials (in parallel across worker threads; output is ordered by
// trial index and independent of the thread count).
McResult run_histogram(const McConfig& cfg);

}  // namespace qsup

#endif  // QSUP_MONTECARLO_HPP
