#ifndef QSUP_COMMON_HPP
#define QSUP_COMMON_HPP

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsup {

using cplx = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Vector2 = Eigen::Vector2cd;
using Vector3 = Eigen::Vector3d;
using RealMatrix2 = Eigen::Matrix2d;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = 3.14159265358979323846;

// Transmission values this close to 0 or 1 make the Fisher information of the
// transmission parameter numerically meaningless, so Fisher-level routines
// refuse to evaluate outside [kTransmissionMin, kTransmissionMax].
inline constexpr double kTransmissionMin = 1e-9;
inline constexpr double kTransmissionMax = 1.0 - 1e-9;

// Thrown when a physical parameter is outside its admissible range.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when a linear system that should be well conditioned is singular
// (e.g. the Lyapunov system defining the SLD of a pure state).
class SingularSystemError : public std::runtime_error {
 public:
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

// 1 - t^p evaluated without cancellation for t close to 1 (p > 0, 0 < t < 1).
inline double one_minus_pow(double t, double p) {
  return -std::expm1(p * std::log(t));
}

// Throws unless t is inside the Fisher-safe transmission window.
inline void require_fisher_safe(double t, const char* where) {
  if (!(t >= kTransmissionMin && t <= kTransmissionMax)) {
    throw DomainError(std::string(where) + ": transmission " +
                      std::to_string(t) + " outside [1e-9, 1-1e-9]");
  }
}

}  // namespace qsup

#endif  // QSUP_COMMON_HPP
