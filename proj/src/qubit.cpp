#include "qsup/qubit.hpp"

#include <Eigen/Eigenvalues>

namespace qsup {

namespace {

void require_density_matrix(const Eigen::MatrixXcd& rho, const char* where) {
  const double tol = 1e-12;
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw DomainError(std::string(where) + ": matrix is not Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > tol ||
      std::abs(rho.trace().imag()) > tol) {
    throw DomainError(std::string(where) + ": trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho,
                                                     Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol) {
    throw DomainError(std::string(where) +
                      ": matrix has a negative eigenvalue");
  }
}

}  // namespace

QubitState::QubitState(const Matrix2& rho) : rho_(rho) {
  require_density_matrix(rho_, "QubitState");
}

FullState::FullState(const Matrix4& rho) : rho_(rho) {
  require_density_matrix(rho_, "FullState");
}

QubitState signal_state(const SampleParams& p) {
  cplx coh = 0.5 * p.tn() * std::exp(-kI * p.n * p.phi);
  Matrix2 rho;
  rho << 0.5, coh, std::conj(coh), 0.5;
  return QubitState(rho);
}

FullState full_state(const SampleParams& p, double theta) {
  // Pure joint state: the lost amplitude sqrt(1 - t^{2n}) sits in the
  // environment slot, the detection phase theta multiplies the second arm.
  double tn = p.tn();
  double loss = std::sqrt(p.one_minus_t2n());
  cplx arm = std::exp(kI * theta);
  Eigen::Vector4cd psi;
  psi << 1.0, 0.0, arm * tn * std::exp(kI * p.n * p.phi), arm * loss;
  psi /= std::sqrt(2.0);
  return FullState(psi * psi.adjoint());
}

QubitState partial_trace_signal(const FullState& full) {
  const Matrix4& rho = full.matrix();
  Matrix2 out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out(a, b) = rho(2 * a, 2 * b) + rho(2 * a + 1, 2 * b + 1);
    }
  }
  return QubitState(out);
}

Vector3 bloch_vector(const QubitState& s) {
  const Matrix2& m = s.matrix();
  return Vector3(2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(),
                 (m(0, 0) - m(1, 1)).real());
}

QubitState state_from_bloch(const Vector3& r) {
  if (r.norm() > 1.0 + 1e-12) {
    throw DomainError("state_from_bloch: Bloch vector longer than 1");
  }
  Matrix2 rho;
  rho << 0.5 * (1.0 + r.z()), 0.5 * cplx(r.x(), -r.y()),
      0.5 * cplx(r.x(), r.y()), 0.5 * (1.0 - r.z());
  return QubitState(rho);
}

double purity(const QubitState& s) {
  return (s.matrix() * s.matrix()).trace().real();
}

double detection_probability(const SampleParams& p, double theta, Sign port) {
  double fringe = p.tn() * std::cos(theta + p.n * p.phi);
  return 0.5 * (port == Sign::plus ? 1.0 + fringe : 1.0 - fringe);
}

}  // namespace qsup
