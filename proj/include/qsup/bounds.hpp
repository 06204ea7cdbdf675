#ifndef QSUP_BOUNDS_HPP
#define QSUP_BOUNDS_HPP

#include "qsup/common.hpp"
#include "qsup/fisher.hpp"
#include "qsup/params.hpp"

namespace qsup {

// Unbiased-estimator observables (X_t, X_phi) satisfying the locally
// unbiased constraints Tr(X_i rho) = 0 and Tr(X_i drho_j) = delta_ij.
// d and h are the residual diagonal degrees of freedom.
struct XOperatorPair {
  HermitianObservable x_t;
  HermitianObservable x_phi;
  double d;
  double h;
};

// Result of a derivative-free 2-d minimisation.
struct Minimum2d {
  double value;
  double d;
  double h;
};

// Scalar two-parameter cost bounds at an operating point, together with the
// minimisers that achieve them.
struct BoundsReport {
  double c_s;          // SLD Cramer-Rao cost Tr(F^{-1})
  double c_h;          // Holevo cost (equals c_s for this model)
  double c_n;          // Nagaoka cost
  double d_star;       // Holevo/Nagaoka minimiser, X_t diagonal freedom
  double h_star;       // Holevo/Nagaoka minimiser, X_phi diagonal freedom
  double lambda_star;  // optimal detector split for the Nagaoka POVM
};

// Trace of the inverse quantum Fisher matrix,
//   C_S = (1 - t^{2n}) / (n^2 t^{2n-2}) + 1 / (n^2 t^{2n}).
double sld_crb(const SampleParams& p);

// Holevo bound; coincides with sld_crb for this model, minimised at
// (d, h) = (-t/n, 0).
double holevo_bound(const SampleParams& p);

// Holevo objective at arbitrary diagonal freedoms,
//   H(d, h) = d^2 + 2 d t/n + t^{2-2n}/n^2 + h^2 + t^{-2n}/n^2
//           + 2 |d n + t| / n^2.
double holevo_objective(const SampleParams& p, double d, double h);

// Minimises holevo_objective on a 101x101 grid over
// d in [-2t/n - 1, 1], h in [-1, 1], then refines the best cell with an
// iterated grid shrink until the box is below 1e-12 wide.
Minimum2d holevo_numeric(const SampleParams& p);

// Nagaoka bound, closed form
//   C_N = (1 + t sqrt(1 - t^{2n}))^2 / (n^2 t^{2n}).
double nagaoka_bound(const SampleParams& p);

// Nagaoka objective: Tr(rho X_t^2) + Tr(rho X_phi^2)
//   + TrAbs(sqrt(rho) [X_t, X_phi] sqrt(rho)),
// with the trace norm evaluated through the singular values of the
// sandwiched commutator.
double nagaoka_objective(const SampleParams& p, double d, double h);

// Minimises nagaoka_objective with the same grid + shrink scheme as
// holevo_numeric.
Minimum2d nagaoka_numeric(const SampleParams& p);

// Trace-norm penalty of the Nagaoka objective at given diagonal freedoms; at
// the optimum it equals 2 t^{1-2n} sqrt(1 - t^{2n}) / n^2.
double nagaoka_penalty(const SampleParams& p, double d, double h);

// Locally unbiased pair at arbitrary diagonal freedoms (constraints are
// re-verified against the analytic state derivatives on construction).
XOperatorPair x_operator_pair(const SampleParams& p, double d, double h);

// The pair at the optimum (d, h) = (-t/n, 0); X_t and X_phi are then the
// SLDs scaled by the inverse of their Fisher informations.
XOperatorPair optimal_x_operators(const SampleParams& p);

// Four-outcome measurement splitting shots between the two SLD eigenbases:
//   { lambda P(t,+), lambda P(t,-), (1-lambda) P(phi,+), (1-lambda) P(phi,-) }.
Povm nagaoka_povm(const SampleParams& p, double lambda);

// Summed reconstruction variance of the split measurement,
//   Var = t^{-2n} ((lambda-1)(-t^2)(t^{2n}-1) - lambda) / ((lambda-1) lambda n^2),
// cross-checked against the explicit reconstruction-coefficient route (the
// two must agree to 1e-10 relative).
double povm_variance(const SampleParams& p, double lambda);

// Detector split minimising povm_variance:
//   lambda* = t sqrt(1 - t^{2n}) / (1 + t sqrt(1 - t^{2n}));
// povm_variance(p, lambda*) equals nagaoka_bound(p).
double optimal_lambda(const SampleParams& p);

// All scalar bounds and minimisers at one operating point.
BoundsReport bounds_report(const SampleParams& p);

}  // namespace qsup

#endif  // QSUP_BOUNDS_HPP
