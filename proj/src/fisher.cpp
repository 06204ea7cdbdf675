#include "qsup/fisher.hpp"

#include <Eigen/Eigenvalues>

#include "qsup/qubit.hpp"

namespace qsup {

namespace {

// Pauli operators along the coherence direction (par) and orthogonal to it
// (perp) in the equatorial plane.
Matrix2 sigma_par(double nphi) {
  Matrix2 m;
  m << 0.0, std::exp(-kI * nphi), std::exp(kI * nphi), 0.0;
  return m;
}

Matrix2 sigma_perp(double nphi) {
  Matrix2 m;
  m << 0.0, -kI * std::exp(-kI * nphi), kI * std::exp(kI * nphi), 0.0;
  return m;
}

struct BlochDerivatives {
  Vector3 r;
  Vector3 dr_t;
  Vector3 dr_phi;
};

BlochDerivatives bloch_derivatives(const SampleParams& p) {
  double tn = p.tn();
  double c = std::cos(p.n * p.phi);
  double s = std::sin(p.n * p.phi);
  double dtn = p.n * std::pow(p.t, p.n - 1.0);  // d(t^n)/dt
  return {Vector3(tn * c, tn * s, 0.0), Vector3(dtn * c, dtn * s, 0.0),
          Vector3(-p.n * tn * s, p.n * tn * c, 0.0)};
}

// CFI of the projective measurement along Bloch axis m for one parameter:
// (m . dr)^2 / (1 - (m . r)^2).  The denominator stays positive because
// |r| = t^n < 1 inside the admissible domain.
double cfi_along_axis(const Vector3& axis, const BlochDerivatives& bd,
                      Which which) {
  const Vector3& dr = which == Which::transmission ? bd.dr_t : bd.dr_phi;
  double signal = axis.dot(dr);
  double offset = axis.dot(bd.r);
  return signal * signal / (1.0 - offset * offset);
}

}  // namespace

HermitianObservable::HermitianObservable(const Matrix2& m) : m_(m) {
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("HermitianObservable: matrix is not Hermitian");
  }
}

ProjectiveMeasurement::ProjectiveMeasurement(const Vector2& plus,
                                             const Vector2& minus)
    : plus_(plus), minus_(minus) {
  const double tol = 1e-12;
  if (std::abs(plus_.norm() - 1.0) > tol ||
      std::abs(minus_.norm() - 1.0) > tol ||
      std::abs(plus_.dot(minus_)) > tol) {
    throw DomainError("ProjectiveMeasurement: kets are not orthonormal");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::along_axis(const Vector3& axis) {
  Vector3 m = axis;
  double norm = m.norm();
  if (norm < 1e-15) {
    throw DomainError("ProjectiveMeasurement: zero axis");
  }
  m /= norm;
  Matrix2 pauli;
  pauli << m.z(), cplx(m.x(), -m.y()), cplx(m.x(), m.y()), -m.z();
  Eigen::SelfAdjointEigenSolver<Matrix2> es(pauli);
  // Eigenvalues come out ascending; the + outcome is the +1 eigenvector.
  return ProjectiveMeasurement(es.eigenvectors().col(1),
                               es.eigenvectors().col(0));
}

Vector3 ProjectiveMeasurement::axis() const {
  Matrix2 proj = projector_plus();
  // Bloch vector of the projector: P = (I + m . sigma) / 2.
  return Vector3(2.0 * proj(1, 0).real(), 2.0 * proj(1, 0).imag(),
                 (proj(0, 0) - proj(1, 1)).real());
}

Povm::Povm(std::vector<Matrix2> elements) : elements_(std::move(elements)) {
  const double tol = 1e-12;
  if (elements_.empty()) throw DomainError("Povm: no elements");
  Matrix2 sum = Matrix2::Zero();
  for (const Matrix2& e : elements_) {
    if ((e - e.adjoint()).cwiseAbs().maxCoeff() > tol) {
      throw DomainError("Povm: element is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Matrix2> es(e, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -tol) {
      throw DomainError("Povm: element is not positive semidefinite");
    }
    sum += e;
  }
  if ((sum - Matrix2::Identity()).cwiseAbs().maxCoeff() > tol) {
    throw DomainError("Povm: elements do not sum to the identity");
  }
}

Matrix2 signal_state_derivative(const SampleParams& p, Which which) {
  double nphi = p.n * p.phi;
  if (which == Which::transmission) {
    return 0.5 * p.n * std::pow(p.t, p.n - 1.0) * sigma_par(nphi);
  }
  return 0.5 * p.n * p.tn() * sigma_perp(nphi);
}

FisherMatrix qfi_matrix(const SampleParams& p) {
  require_fisher_safe(p.t, "qfi_matrix");
  double denom = p.one_minus_t2n();
  double f_tt = p.n * p.n * std::pow(p.t, 2.0 * p.n - 2.0) / denom;
  double f_pp = p.n * p.n * p.tn() * p.tn();
  FisherMatrix closed;
  closed << f_tt, 0.0, 0.0, f_pp;

  // Independent route through the Bloch construction
  //   F_ij = dr_i . dr_j + (r . dr_i)(r . dr_j) / (1 - |r|^2).
  BlochDerivatives bd = bloch_derivatives(p);
  auto entry = [&](const Vector3& a, const Vector3& b) {
    return a.dot(b) + bd.r.dot(a) * bd.r.dot(b) / denom;
  };
  FisherMatrix bloch;
  bloch << entry(bd.dr_t, bd.dr_t), entry(bd.dr_t, bd.dr_phi),
      entry(bd.dr_phi, bd.dr_t), entry(bd.dr_phi, bd.dr_phi);

  double scale = std::max(f_tt, f_pp);
  if ((closed - bloch).cwiseAbs().maxCoeff() > 1e-10 * scale) {
    throw std::logic_error("qfi_matrix: closed form and Bloch route disagree");
  }
  return closed;
}

HermitianObservable sld(const SampleParams& p, Which which) {
  require_fisher_safe(p.t, "sld");
  double nphi = p.n * p.phi;
  if (which == Which::transmission) {
    double denom = p.one_minus_t2n();
    double a = -p.n * std::pow(p.t, 2.0 * p.n - 1.0) / denom;
    double b = p.n * std::pow(p.t, p.n - 1.0) / denom;
    return HermitianObservable(a * Matrix2::Identity() + b * sigma_par(nphi));
  }
  return HermitianObservable(p.n * p.tn() * sigma_perp(nphi));
}

HermitianObservable sld_numeric(const SampleParams& p, Which which,
                                double step) {
  require_fisher_safe(p.t, "sld_numeric");
  if (!(step >= 1e-7 && step <= 1e-4)) {
    throw DomainError("sld_numeric: step outside [1e-7, 1e-4]");
  }
  Matrix2 rho = signal_state(p).matrix();
  Eigen::SelfAdjointEigenSolver<Matrix2> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < 1e-14) {
    throw SingularSystemError("sld_numeric: state is pure to machine precision");
  }

  // Central finite difference of the state.
  Matrix2 drho;
  if (which == Which::transmission) {
    drho = (signal_state({p.t + step, p.phi, p.n}).matrix() -
            signal_state({p.t - step, p.phi, p.n}).matrix()) /
           (2.0 * step);
  } else {
    drho = (signal_state({p.t, p.phi + step, p.n}).matrix() -
            signal_state({p.t, p.phi - step, p.n}).matrix()) /
           (2.0 * step);
  }

  // Hermitian unknowns u = (L00, L11, Re L01, Im L01); the Lyapunov equation
  // (L rho + rho L)/2 = drho is linear in u, with four real components.
  auto components = [](const Matrix2& m) {
    return Eigen::Vector4d(m(0, 0).real(), m(1, 1).real(), m(0, 1).real(),
                           m(0, 1).imag());
  };
  auto basis = [](int k) {
    Matrix2 e = Matrix2::Zero();
    switch (k) {
      case 0: e(0, 0) = 1.0; break;
      case 1: e(1, 1) = 1.0; break;
      case 2: e(0, 1) = 1.0; e(1, 0) = 1.0; break;
      default: e(0, 1) = -kI; e(1, 0) = kI; break;
    }
    return e;
  };
  Eigen::Matrix4d system;
  for (int k = 0; k < 4; ++k) {
    Matrix2 image = 0.5 * (basis(k) * rho + rho * basis(k));
    system.col(k) = components(image);
  }
  Eigen::ColPivHouseholderQR<Eigen::Matrix4d> qr(system);
  if (qr.rank() < 4) {
    throw SingularSystemError("sld_numeric: Lyapunov system is singular");
  }
  // u holds coefficients in the Hermitian basis above, where the sigma_y
  // element carries (0,1)-entry -i: L01 = u2 - i u3.
  Eigen::Vector4d u = qr.solve(components(drho));
  Matrix2 sld_matrix;
  sld_matrix << u(0), cplx(u(2), -u(3)), cplx(u(2), u(3)), u(1);
  return HermitianObservable(sld_matrix);
}

ProjectiveMeasurement sld_eigenbasis(const SampleParams& p, Which which) {
  cplx phase = std::exp(kI * p.n * p.phi);
  cplx upper = which == Which::transmission ? phase : kI * phase;
  Vector2 plus, minus;
  plus << 1.0 / std::sqrt(2.0), upper / std::sqrt(2.0);
  minus << 1.0 / std::sqrt(2.0), -upper / std::sqrt(2.0);
  return ProjectiveMeasurement(plus, minus);
}

namespace {

// Shared outcome accumulator implementing the vanishing-probability rule:
// p < 1e-15 contributes nothing if the derivative vanishes too, and is a
// domain error otherwise (the measurement pierces a node of the model).
double fisher_term(double prob, double deriv, const char* where) {
  const double eps = 1e-15;
  if (prob < eps) {
    if (std::abs(deriv) < eps) return 0.0;
    throw DomainError(std::string(where) +
                      ": vanishing outcome probability with non-vanishing "
                      "derivative");
  }
  return deriv * deriv / prob;
}

}  // namespace

double cfi(const SampleParams& p, const ProjectiveMeasurement& meas,
           Which which, double operating_point_phi) {
  // The measurement is a fixed object; for phase estimation the state sits
  // at the operating point and the deviation is estimated around it.
  SampleParams at(p.t,
                  which == Which::phase ? operating_point_phi : p.phi,
                  p.n);
  Matrix2 rho = signal_state(at).matrix();
  Matrix2 drho = signal_state_derivative(at, which);
  double total = 0.0;
  for (const Matrix2& proj :
       {meas.projector_plus(), meas.projector_minus()}) {
    double prob = (rho * proj).trace().real();
    double deriv = (drho * proj).trace().real();
    total += fisher_term(prob, deriv, "cfi");
  }
  return total;
}

FisherMatrix cfi_matrix(const SampleParams& p, const Povm& povm) {
  Matrix2 rho = signal_state(p).matrix();
  Matrix2 drho_t = signal_state_derivative(p, Which::transmission);
  Matrix2 drho_p = signal_state_derivative(p, Which::phase);
  FisherMatrix f = FisherMatrix::Zero();
  const double eps = 1e-15;
  for (const Matrix2& e : povm.elements()) {
    double prob = (rho * e).trace().real();
    double dt = (drho_t * e).trace().real();
    double dp = (drho_p * e).trace().real();
    if (prob < eps) {
      if (std::abs(dt) < eps && std::abs(dp) < eps) continue;
      throw DomainError("cfi_matrix: vanishing outcome probability with "
                        "non-vanishing derivative");
    }
    f(0, 0) += dt * dt / prob;
    f(0, 1) += dt * dp / prob;
    f(1, 1) += dp * dp / prob;
  }
  f(1, 0) = f(0, 1);
  return f;
}

double cfi_bruteforce_max(const SampleParams& p, Which which,
                          int resolution) {
  require_fisher_safe(p.t, "cfi_bruteforce_max");
  if (resolution < 2) {
    throw DomainError("cfi_bruteforce_max: resolution must be >= 2");
  }
  BlochDerivatives bd = bloch_derivatives(p);
  auto value_at = [&](double polar, double azimuth) {
    Vector3 axis(std::sin(polar) * std::cos(azimuth),
                 std::sin(polar) * std::sin(azimuth), std::cos(polar));
    return cfi_along_axis(axis, bd, which);
  };

  // Coarse sphere scan, tracking the best axis angles.
  double best = -1.0, best_polar = 0.0, best_azimuth = 0.0;
  for (int i = 0; i < resolution; ++i) {
    double polar = kPi * i / (resolution - 1);
    for (int j = 0; j < 2 * resolution; ++j) {
      double azimuth = 2.0 * kPi * j / (2 * resolution);
      double v = value_at(polar, azimuth);
      if (v > best) {
        best = v;
        best_polar = polar;
        best_azimuth = azimuth;
      }
    }
  }
  // One local refinement: shrink a window around the best grid point.
  double w_polar = kPi / (resolution - 1);
  double w_azimuth = kPi / resolution;
  const int points = 33;
  for (int round = 0; round < 6; ++round) {
    double p0 = best_polar, a0 = best_azimuth;
    for (int i = 0; i < points; ++i) {
      double polar = p0 - w_polar + 2.0 * w_polar * i / (points - 1);
      for (int j = 0; j < points; ++j) {
        double azimuth = a0 - w_azimuth + 2.0 * w_azimuth * j / (points - 1);
        double v = value_at(polar, azimuth);
        if (v > best) {
          best = v;
          best_polar = polar;
          best_azimuth = azimuth;
        }
      }
    }
    w_polar *= 0.2;
    w_azimuth *= 0.2;
  }
  return best;
}

double phase_scan_cfi(double t, double phi, int settings) {
  require_fisher_safe(t, "phase_scan_cfi");
  if (settings < 2) {
    throw DomainError("phase_scan_cfi: need at least 2 settings");
  }
  double total = 0.0;
  for (int k = 1; k <= settings; ++k) {
    double c = std::cos(phi + 2.0 * kPi * k / settings);
    total += c * c / (1.0 - t * t * c * c);
  }
  return total;
}

double phase_scan_cfi_limit(double t) {
  require_fisher_safe(t, "phase_scan_cfi_limit");
  double u = std::sqrt((1.0 - t) * (1.0 + t));
  return 1.0 / ((1.0 + u) * u);
}

}  // namespace qsup
