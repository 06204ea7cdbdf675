#ifndef QSUP_QUBIT_HPP
#define QSUP_QUBIT_HPP

#include "qsup/common.hpp"
#include "qsup/params.hpp"

namespace qsup {

// Detector port of the balanced readout: the +/- branch of
// p = (1 +/- t^n cos(theta + n phi)) / 2.
enum class Sign { plus, minus };

// Validated 2x2 density matrix (Hermitian, unit trace, positive semidefinite
// up to 1e-12 roundoff).
class QubitState {
 public:
  explicit QubitState(const Matrix2& rho);

  const Matrix2& matrix() const { return rho_; }

 private:
  Matrix2 rho_;
};

// Validated 4x4 density matrix for the joint idler/environment description.
class FullState {
 public:
  explicit FullState(const Matrix4& rho);

  const Matrix4& matrix() const { return rho_; }

 private:
  Matrix4 rho_;
};

// Reduced state of the detected mode pair,
//   rho = 1/2 [[1, t^n e^{-i n phi}], [t^n e^{i n phi}, 1]].
QubitState signal_state(const SampleParams& p);

// Purification of signal_state over the lost (environment) mode, with the
// detection phase theta kept explicit.  Basis ordering:
//   {|01>|1_i 0_E>, |01>|0_i 1_E>, |10>|1_i 0_E>, |10>|0_i 1_E>}.
FullState full_state(const SampleParams& p, double theta);

// Trace over the environment mode; recovers signal_state (with the detection
// phase theta folded into the coherence when theta != 0).
QubitState partial_trace_signal(const FullState& full);

// Bloch vector r with rho = (I + r . sigma) / 2.
Vector3 bloch_vector(const QubitState& s);

// Inverse of bloch_vector; rejects |r| > 1 + 1e-12.
QubitState state_from_bloch(const Vector3& r);

// Tr(rho^2); ranges over (1/2, 1) for the states produced here.
double purity(const QubitState& s);

// Click probability of the chosen detector port,
//   p(+/-) = (1 +/- t^n cos(theta + n phi)) / 2.
double detection_probability(const SampleParams& p, double theta, Sign port);

}  // namespace qsup

#endif  // QSUP_QUBIT_HPP
