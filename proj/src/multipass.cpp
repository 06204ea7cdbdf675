#include "qsup/multipass.hpp"

#include <algorithm>

#include "qsup/bounds.hpp"
#include "qsup/optimize.hpp"

namespace qsup {

namespace {

// Per-shot multipass informations as plain functions of (t, n).
double info_transmission(double t, double n) {
  return n * n * std::pow(t, 2.0 * n - 2.0) / one_minus_pow(t, 2.0 * n);
}

double info_phase(double t, double n) {
  double tn = std::pow(t, n);
  return n * n * tn * tn;
}

// Objective-optimal integer pass count >= 1: compares the two integers
// bracketing n_star (the objectives are unimodal in n).  Candidates whose
// objectives agree to 1e-12 relative are exact ties up to roundoff (e.g.
// the phase information at t = 99/100 is identical for n = 99 and n = 100,
// since (n+1) t = n); ties resolve to the larger pass count.
long best_integer(double n_star, const std::function<double(double)>& objective,
                  bool maximise) {
  long lo = std::max(1L, static_cast<long>(std::floor(n_star)));
  long hi = lo + 1;
  double f_lo = objective(static_cast<double>(lo));
  double f_hi = objective(static_cast<double>(hi));
  double gap = (f_hi - f_lo) / std::max(std::abs(f_hi), std::abs(f_lo));
  if (std::abs(gap) <= 1e-12) return hi;
  bool hi_better = maximise ? (gap > 0.0) : (gap < 0.0);
  return hi_better ? hi : lo;
}

}  // namespace

PassOptimum optimal_n_transmission(double t) {
  require_fisher_safe(t, "optimal_n_transmission");
  double log_t = std::log(t);
  // Stationarity of info_transmission in n: 1 + n ln t - t^{2n} = 0.
  auto residual = [log_t](double n) {
    return 1.0 + n * log_t - std::exp(2.0 * n * log_t);
  };
  double n_star =
      bisect(residual, 1e-6 / -log_t, 10.0 / -log_t, 1e-12);
  auto objective = [t](double n) { return info_transmission(t, n); };
  return {n_star, best_integer(n_star, objective, /*maximise=*/true),
          objective(n_star)};
}

PassOptimum optimal_n_phase(double t) {
  require_fisher_safe(t, "optimal_n_phase");
  double n_star = -1.0 / std::log(t);
  auto objective = [t](double n) { return info_phase(t, n); };
  return {n_star, best_integer(n_star, objective, /*maximise=*/true),
          objective(n_star)};
}

PassOptimum optimal_n_bound(double t, BoundKind kind) {
  require_fisher_safe(t, "optimal_n_bound");
  auto objective = [t, kind](double n) {
    SampleParams p(t, 0.0, n);
    return kind == BoundKind::nagaoka ? nagaoka_bound(p) : sld_crb(p);
  };
  double n_star =
      golden_section_min(objective, 1e-3, 10.0 / -std::log(t), 1e-10);
  return {n_star, best_integer(n_star, objective, /*maximise=*/false),
          objective(n_star)};
}

double enhancement_ratio(double t, Which which, bool integer_constrained) {
  PassOptimum opt = which == Which::transmission ? optimal_n_transmission(t)
                                                 : optimal_n_phase(t);
  auto objective = [t, which](double n) {
    return which == Which::transmission ? info_transmission(t, n)
                                        : info_phase(t, n);
  };
  double n_use = integer_constrained ? static_cast<double>(opt.n_star_int)
                                     : opt.n_star;
  return objective(n_use) / objective(1.0);
}

MixtureAllocation mixture_optimum(double t) {
  double n_t = optimal_n_transmission(t).n_star;
  double n_phi = optimal_n_phase(t).n_star;
  double sqrt_a = std::sqrt(1.0 / info_transmission(t, n_t));
  double sqrt_b = std::sqrt(1.0 / info_phase(t, n_phi));
  double sum = sqrt_a + sqrt_b;
  return {sqrt_a / sum, n_t, n_phi, sum * sum};
}

double mixture_variance_equal_n(double t, double n) {
  require_fisher_safe(t, "mixture_variance_equal_n");
  if (!(n > 0.0)) {
    throw DomainError("mixture_variance_equal_n: pass count must be > 0");
  }
  double sum = std::sqrt(1.0 / info_transmission(t, n)) +
               std::sqrt(1.0 / info_phase(t, n));
  return sum * sum;
}

double mixture_variance_discrete(double t, long total_shots) {
  if (total_shots < 2) {
    throw DomainError("mixture_variance_discrete: need at least 2 shots");
  }
  MixtureAllocation mix = mixture_optimum(t);
  double a = 1.0 / info_transmission(t, mix.n_t);
  double b = 1.0 / info_phase(t, mix.n_phi);
  long shots_t = std::clamp(
      static_cast<long>(std::llround(mix.x * static_cast<double>(total_shots))),
      1L, total_shots - 1);
  return a / static_cast<double>(shots_t) +
         b / static_cast<double>(total_shots - shots_t);
}

double nagaoka_vs_mixture_ratio(double t) {
  double joint = optimal_n_bound(t, BoundKind::nagaoka).objective_at_star;
  return joint / mixture_optimum(t).variance_sum;
}

}  // namespace qsup
