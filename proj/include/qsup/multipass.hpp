#ifndef QSUP_MULTIPASS_HPP
#define QSUP_MULTIPASS_HPP

#include "qsup/common.hpp"
#include "qsup/fisher.hpp"

namespace qsup {

// Optimal pass count for one figure of merit.
struct PassOptimum {
  double n_star;            // continuous optimiser
  long n_star_int;          // best integer >= 1 (objective-optimal rounding)
  double objective_at_star; // figure of merit at n_star
};

// Optimal split of a shot budget between a transmission measurement at its
// best pass count and a phase measurement at its best pass count.
struct MixtureAllocation {
  double x;             // fraction of shots spent on the transmission branch
  double n_t;           // pass count of the transmission branch
  double n_phi;         // pass count of the phase branch
  double variance_sum;  // per-shot summed variance (sqrt(a) + sqrt(b))^2
};

enum class BoundKind { sld, holevo, nagaoka };

// Pass count maximising the transmission information
//   F_t(n) = n^2 t^{2n-2} / (1 - t^{2n}).
// The stationarity condition is the transcendental equation
//   1 + n ln t = t^{2n},
// solved by bisection on [1e-6/|ln t|, 10/|ln t|] to residual < 1e-12.
// The optimal accumulated transmission t^{n*} ~ 0.4508 independently of t.
PassOptimum optimal_n_transmission(double t);

// Pass count maximising the phase information F_phi(n) = n^2 t^{2n}:
// n* = -1 / ln t exactly.
PassOptimum optimal_n_phase(double t);

// Pass count minimising the selected two-parameter cost bound, by
// golden-section search on [1e-3, 10/|ln t|] to a 1e-10 window.
PassOptimum optimal_n_bound(double t, BoundKind kind);

// Information gain of optimal multipassing over single pass,
//   F(n*) / F(1), for the selected parameter; integer_constrained uses the
// objective-optimal integer pass count instead of the continuous one.
double enhancement_ratio(double t, Which which, bool integer_constrained);

// Per-shot summed variance of the shot-splitting strategy with both branches
// at their individually optimal pass counts:
//   min_x (a/x + b/(1-x)) = (sqrt(a) + sqrt(b))^2 at x* = sqrt(a)/(sqrt(a)+sqrt(b)),
// where a = 1/F_t(n_t*) and b = 1/F_phi(n_phi*).
MixtureAllocation mixture_optimum(double t);

// Shot-splitting variance when both branches are forced to the same pass
// count n; equals nagaoka_bound at (t, n) identically.
double mixture_variance_equal_n(double t, double n);

// Total variance of the discretised split of N shots (rounding x* N to the
// nearest integer and recomputing).
double mixture_variance_discrete(double t, long total_shots);

// min_n C_N(t, n) divided by mixture_optimum(t).variance_sum: the cost of
// being forced to one joint Nagaoka measurement instead of splitting shots
// between two single-parameter strategies (>= 1; ~1.01 as t -> 1).
double nagaoka_vs_mixture_ratio(double t);

}  // namespace qsup

#endif  // QSUP_MULTIPASS_HPP
