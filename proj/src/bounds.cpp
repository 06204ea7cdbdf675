#include "qsup/bounds.hpp"

#include <Eigen/Eigenvalues>

#include "qsup/optimize.hpp"
#include "qsup/qubit.hpp"

namespace qsup {

namespace {

// Sum of singular values of a 2x2 matrix, closed form through the Gram
// matrix, with prescaling so that huge entries (t^{-n} factors) cannot
// overflow when squared.
double trace_norm_2x2(const Matrix2& m) {
  double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0 || !std::isfinite(scale)) return scale * 2.0;
  Matrix2 g = (m / scale).adjoint() * (m / scale);
  double mean = 0.5 * (g(0, 0).real() + g(1, 1).real());
  double half_gap = 0.5 * (g(0, 0).real() - g(1, 1).real());
  double radius = std::sqrt(half_gap * half_gap + std::norm(g(0, 1)));
  double low = std::max(mean - radius, 0.0);
  return scale * (std::sqrt(mean + radius) + std::sqrt(low));
}

// Positive square root of a 2x2 density matrix; eigenvalues within roundoff
// below zero are clamped (tolerance 1e-14, validated by QubitState already).
Matrix2 sqrt_density(const Matrix2& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix2> es(rho);
  Eigen::Vector2d lams = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() *
         lams.cwiseSqrt().asDiagonal() *
         es.eigenvectors().adjoint();
}

struct XContext {
  Matrix2 rho;
  Matrix2 sqrt_rho;
  cplx phase;       // e^{i n phi}
  double coeff_t;   // t^{1-n} / n
  double coeff_phi; // t^{-n} / n
  double t_over_n;
};

XContext make_context(const SampleParams& p) {
  XContext ctx;
  ctx.rho = signal_state(p).matrix();
  ctx.sqrt_rho = sqrt_density(ctx.rho);
  ctx.phase = std::exp(kI * p.n * p.phi);
  ctx.coeff_t = std::pow(p.t, 1.0 - p.n) / p.n;
  ctx.coeff_phi = std::pow(p.t, -p.n) / p.n;
  ctx.t_over_n = p.t / p.n;
  return ctx;
}

Matrix2 x_t_matrix(const XContext& ctx, double d) {
  Matrix2 x;
  x << -d - 2.0 * ctx.t_over_n, ctx.coeff_t * std::conj(ctx.phase),
      ctx.coeff_t * ctx.phase, d;
  return x;
}

Matrix2 x_phi_matrix(const XContext& ctx, double h) {
  Matrix2 x;
  x << -h, -kI * ctx.coeff_phi * std::conj(ctx.phase),
      kI * ctx.coeff_phi * ctx.phase, h;
  return x;
}

double nagaoka_objective_ctx(const XContext& ctx, double d, double h) {
  Matrix2 xt = x_t_matrix(ctx, d);
  Matrix2 xp = x_phi_matrix(ctx, h);
  double variance_part = (ctx.rho * xt * xt).trace().real() +
                         (ctx.rho * xp * xp).trace().real();
  Matrix2 comm = xt * xp - xp * xt;
  return variance_part +
         trace_norm_2x2(ctx.sqrt_rho * comm * ctx.sqrt_rho);
}

}  // namespace

double sld_crb(const SampleParams& p) {
  require_fisher_safe(p.t, "sld_crb");
  double t2n = p.tn() * p.tn();
  double nn = p.n * p.n;
  return p.one_minus_t2n() / (nn * t2n / (p.t * p.t)) + 1.0 / (nn * t2n);
}

double holevo_bound(const SampleParams& p) { return sld_crb(p); }

double holevo_objective(const SampleParams& p, double d, double h) {
  double nn = p.n * p.n;
  return d * d + 2.0 * d * p.t / p.n +
         std::pow(p.t, 2.0 - 2.0 * p.n) / nn + h * h +
         std::pow(p.t, -2.0 * p.n) / nn +
         2.0 * std::abs(d * p.n + p.t) / nn;
}

Minimum2d holevo_numeric(const SampleParams& p) {
  require_fisher_safe(p.t, "holevo_numeric");
  GridMin2d g = grid_min_2d(
      [&p](double d, double h) { return holevo_objective(p, d, h); },
      -2.0 * p.t / p.n - 1.0, 1.0, -1.0, 1.0, 101, 1e-12);
  return {g.value, g.x, g.y};
}

double nagaoka_bound(const SampleParams& p) {
  require_fisher_safe(p.t, "nagaoka_bound");
  double visibility = 1.0 + p.t * std::sqrt(p.one_minus_t2n());
  return visibility * visibility / (p.n * p.n * p.tn() * p.tn());
}

double nagaoka_objective(const SampleParams& p, double d, double h) {
  require_fisher_safe(p.t, "nagaoka_objective");
  return nagaoka_objective_ctx(make_context(p), d, h);
}

double nagaoka_penalty(const SampleParams& p, double d, double h) {
  require_fisher_safe(p.t, "nagaoka_penalty");
  XContext ctx = make_context(p);
  Matrix2 xt = x_t_matrix(ctx, d);
  Matrix2 xp = x_phi_matrix(ctx, h);
  Matrix2 comm = xt * xp - xp * xt;
  return trace_norm_2x2(ctx.sqrt_rho * comm * ctx.sqrt_rho);
}

Minimum2d nagaoka_numeric(const SampleParams& p) {
  require_fisher_safe(p.t, "nagaoka_numeric");
  XContext ctx = make_context(p);
  GridMin2d g = grid_min_2d(
      [&ctx](double d, double h) { return nagaoka_objective_ctx(ctx, d, h); },
      -2.0 * p.t / p.n - 1.0, 1.0, -1.0, 1.0, 101, 1e-10);
  return {g.value, g.x, g.y};
}

XOperatorPair x_operator_pair(const SampleParams& p, double d, double h) {
  require_fisher_safe(p.t, "x_operator_pair");
  XContext ctx = make_context(p);
  Matrix2 xt = x_t_matrix(ctx, d);
  Matrix2 xp = x_phi_matrix(ctx, h);

  // Re-verify the locally unbiased constraints against the analytic state
  // derivatives instead of trusting the parametrisation.
  Matrix2 drho_t = signal_state_derivative(p, Which::transmission);
  Matrix2 drho_p = signal_state_derivative(p, Which::phase);
  auto check = [](double got, double want, double scale, const char* what) {
    if (std::abs(got - want) > 1e-10 * scale) {
      throw std::logic_error(std::string("x_operator_pair: constraint ") +
                             what + " violated");
    }
  };
  for (const auto& [x, is_t] : {std::pair{&xt, true}, std::pair{&xp, false}}) {
    double scale_x = 1.0 + x->cwiseAbs().maxCoeff();
    double scale_t = scale_x * (1.0 + drho_t.cwiseAbs().maxCoeff());
    double scale_p = scale_x * (1.0 + drho_p.cwiseAbs().maxCoeff());
    check((ctx.rho * *x).trace().real(), 0.0, scale_x, "Tr(X rho) = 0");
    check((drho_t * *x).trace().real(), is_t ? 1.0 : 0.0, scale_t,
          "Tr(X drho_t)");
    check((drho_p * *x).trace().real(), is_t ? 0.0 : 1.0, scale_p,
          "Tr(X drho_phi)");
  }
  return {HermitianObservable(xt), HermitianObservable(xp), d, h};
}

XOperatorPair optimal_x_operators(const SampleParams& p) {
  return x_operator_pair(p, -p.t / p.n, 0.0);
}

Povm nagaoka_povm(const SampleParams& p, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("nagaoka_povm: lambda must lie in (0, 1)");
  }
  ProjectiveMeasurement basis_t = sld_eigenbasis(p, Which::transmission);
  ProjectiveMeasurement basis_p = sld_eigenbasis(p, Which::phase);
  return Povm({lambda * basis_t.projector_plus(),
               lambda * basis_t.projector_minus(),
               (1.0 - lambda) * basis_p.projector_plus(),
               (1.0 - lambda) * basis_p.projector_minus()});
}

double povm_variance(const SampleParams& p, double lambda) {
  require_fisher_safe(p.t, "povm_variance");
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("povm_variance: lambda must lie in (0, 1)");
  }
  double t2n = p.tn() * p.tn();
  double nn = p.n * p.n;
  double closed =
      (p.t * p.t * (1.0 - lambda) * p.one_minus_t2n() + lambda) /
      (t2n * (1.0 - lambda) * lambda * nn);

  // Independent route: reconstruction coefficients assigning an estimator
  // value to each POVM outcome, solved from  sum_x c_x E_x = X  by least
  // squares (8 real equations, 2 unknowns per parameter).
  XOperatorPair xs = optimal_x_operators(p);
  Povm povm = nagaoka_povm(p, lambda);
  Matrix2 rho = signal_state(p).matrix();
  auto solve_pair = [](const Matrix2& e1, const Matrix2& e2,
                       const Matrix2& target) {
    Eigen::Matrix<double, 8, 2> a;
    Eigen::Matrix<double, 8, 1> b;
    for (int idx = 0; idx < 4; ++idx) {
      int row = 2 * idx;
      int i = idx / 2, j = idx % 2;
      a(row, 0) = e1(i, j).real();
      a(row, 1) = e2(i, j).real();
      a(row + 1, 0) = e1(i, j).imag();
      a(row + 1, 1) = e2(i, j).imag();
      b(row) = target(i, j).real();
      b(row + 1) = target(i, j).imag();
    }
    Eigen::Vector2d c = a.colPivHouseholderQr().solve(b);
    double residual = (a * c - b).norm();
    if (residual > 1e-8 * (1.0 + b.norm())) {
      throw std::logic_error(
          "povm_variance: estimator observable not reconstructible");
    }
    return c;
  };
  Eigen::Vector2d lm = solve_pair(povm.elements()[0], povm.elements()[1],
                                  xs.x_t.matrix());
  Eigen::Vector2d pq = solve_pair(povm.elements()[2], povm.elements()[3],
                                  xs.x_phi.matrix());
  double reconstructed = 0.0;
  double coeffs[4] = {lm(0), lm(1), pq(0), pq(1)};
  for (int x = 0; x < 4; ++x) {
    reconstructed +=
        coeffs[x] * coeffs[x] * (rho * povm.elements()[x]).trace().real();
  }

  if (std::abs(reconstructed - closed) > 1e-10 * std::abs(closed)) {
    throw std::logic_error(
        "povm_variance: closed form and reconstruction route disagree");
  }
  return closed;
}

double optimal_lambda(const SampleParams& p) {
  require_fisher_safe(p.t, "optimal_lambda");
  double damp = p.t * std::sqrt(p.one_minus_t2n());
  return damp / (1.0 + damp);
}

BoundsReport bounds_report(const SampleParams& p) {
  BoundsReport r;
  r.c_s = sld_crb(p);
  r.c_h = holevo_bound(p);
  r.c_n = nagaoka_bound(p);
  r.d_star = -p.t / p.n;
  r.h_star = 0.0;
  r.lambda_star = optimal_lambda(p);
  return r;
}

}  // namespace qsup
