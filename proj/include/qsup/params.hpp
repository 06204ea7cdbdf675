#ifndef QSUP_PARAMS_HPP
#define QSUP_PARAMS_HPP

#include "qsup/common.hpp"

namespace qsup {

// Operating point of the interferometer: per-pass transmission t of the
// sample, per-pass phase phi imprinted on the idler, and pass count n.
// n is a positive real; routines that require an integer pass count say so.
struct SampleParams {
  double t;
  double phi;
  double n;

  SampleParams(double t_, double phi_, double n_) : t(t_), phi(phi_), n(n_) {
    if (!(t > 0.0 && t < 1.0)) {
      throw DomainError("SampleParams: transmission must satisfy 0 < t < 1");
    }
    if (!(n > 0.0)) {
      throw DomainError("SampleParams: pass count must satisfy n > 0");
    }
    if (!std::isfinite(phi)) {
      throw DomainError("SampleParams: phase must be finite");
    }
  }

  // Accumulated coherence amplitude t^n of the n-pass state.
  double tn() const { return std::pow(t, n); }
  // 1 - t^{2n}, evaluated without cancellation near t = 1.
  double one_minus_t2n() const { return one_minus_pow(t, 2.0 * n); }
};

}  // namespace qsup

#endif  // QSUP_PARAMS_HPP
