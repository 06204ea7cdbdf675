#ifndef QSUP_FISHER_HPP
#define QSUP_FISHER_HPP

#include <vector>

#include "qsup/common.hpp"
#include "qsup/params.hpp"
#include "qsup/qubit.hpp"

namespace qsup {

// Parameter selector for single-parameter quantities.
enum class Which { transmission, phase };

// Hermitian 2x2 observable (validated to 1e-12 on construction).
class HermitianObservable {
 public:
  explicit HermitianObservable(const Matrix2& m);

  const Matrix2& matrix() const { return m_; }

 private:
  Matrix2 m_;
};

// Two-outcome projective measurement given by an orthonormal ket pair.
class ProjectiveMeasurement {
 public:
  ProjectiveMeasurement(const Vector2& plus, const Vector2& minus);

  // Measurement of the Pauli operator along the Bloch axis `axis`.
  static ProjectiveMeasurement along_axis(const Vector3& axis);

  const Vector2& ket_plus() const { return plus_; }
  const Vector2& ket_minus() const { return minus_; }
  Matrix2 projector_plus() const { return plus_ * plus_.adjoint(); }
  Matrix2 projector_minus() const { return minus_ * minus_.adjoint(); }
  // Bloch axis of the + projector.
  Vector3 axis() const;

 private:
  Vector2 plus_;
  Vector2 minus_;
};

// Positive operator-valued measure: elements are PSD and sum to the identity
// (validated to 1e-12).
class Povm {
 public:
  explicit Povm(std::vector<Matrix2> elements);

  const std::vector<Matrix2>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::vector<Matrix2> elements_;
};

// 2x2 symmetric Fisher matrix, indexed (transmission, phase).
using FisherMatrix = RealMatrix2;

// Analytic derivative of signal_state(p) with respect to the selected
// parameter.
Matrix2 signal_state_derivative(const SampleParams& p, Which which);

// Quantum Fisher information matrix
//   F = diag(n^2 t^{2n-2} / (1 - t^{2n}),  n^2 t^{2n}).
// Evaluated both from the closed form and from the Bloch construction
//   F_ij = dr_i . dr_j + (r . dr_i)(r . dr_j) / (1 - |r|^2);
// the two routes must agree to 1e-10 relative or a logic_error is thrown.
FisherMatrix qfi_matrix(const SampleParams& p);

// Symmetric logarithmic derivative, closed form:
//   L_t   = -(n t^{2n-1}/(1-t^{2n})) I + (n t^{n-1}/(1-t^{2n})) sigma_par
//   L_phi = n t^n sigma_perp
// where sigma_par/sigma_perp are the Pauli operators along / orthogonal to
// the coherence direction in the equatorial plane.
HermitianObservable sld(const SampleParams& p, Which which);

// SLD obtained by solving the 4-real-unknown linear system
// (L rho + rho L)/2 = drho with drho by central finite difference of step
// `step` (validated to [1e-7, 1e-4]).  Throws SingularSystemError when rho is
// pure to machine precision.
HermitianObservable sld_numeric(const SampleParams& p, Which which,
                                double step = 1e-5);

// Eigenbasis of the corresponding SLD; this measurement attains the QFI of
// the selected parameter at the operating point.
ProjectiveMeasurement sld_eigenbasis(const SampleParams& p, Which which);

// Classical Fisher information of a fixed two-outcome measurement for one
// parameter.  The measurement is held fixed; for which = phase the state is
// evaluated at operating_point_phi (estimation of a small deviation around
// the operating point).  Outcomes with probability < 1e-15 contribute zero
// when their derivative also vanishes (< 1e-15) and raise DomainError
// otherwise.
double cfi(const SampleParams& p, const ProjectiveMeasurement& meas,
           Which which, double operating_point_phi);

// Classical Fisher matrix of a fixed POVM at the operating point p
// (derivatives taken analytically at p).
FisherMatrix cfi_matrix(const SampleParams& p, const Povm& povm);

// Maximum of cfi over projective measurement axes: a (resolution x
// 2*resolution) sphere grid in the axis angles followed by one local grid
// refinement.  Lies within [0.999 F_Q, F_Q + 1e-9] at resolution >= 256.
double cfi_bruteforce_max(const SampleParams& p, Which which,
                          int resolution = 256);

// Transmission information collected by a single-pass phase scan: the
// detector phase is stepped through x_k = phi + 2 pi k / M and the classical
// informations add,
//   sum_{k=1..M} cos^2(x_k) / (1 - t^2 cos^2(x_k)).
double phase_scan_cfi(double t, double phi, int settings);

// Per-setting limit of phase_scan_cfi / M as M -> infinity:
//   (1 - sqrt(1 - t^2)) / (t^2 sqrt(1 - t^2)),
// evaluated in the cancellation-free form 1 / ((1 + u) u), u = sqrt(1 - t^2).
double phase_scan_cfi_limit(double t);

}  // namespace qsup

#endif  // QSUP_FISHER_HPP
