#ifndef QSUP_MATERIAL_HPP
#define QSUP_MATERIAL_HPP

#include "qsup/common.hpp"

namespace qsup {

// Propagation through an absorbing, refracting medium of length L:
// per unit length the field picks up attenuation gamma and phase kappa, so
// t = e^{-gamma L} and phi = kappa L with the path length playing the role
// of the pass count.
struct MaterialParams {
  double gamma;  // attenuation coefficient, > 0
  double kappa;  // phase coefficient (enters only through phi = kappa L)
  double length; // path length L, > 0

  MaterialParams(double gamma_, double kappa_, double length_);
};

// Quantum Fisher information of the attenuation coefficient,
//   F_gamma = L^2 / (e^{2 gamma L} - 1),
// with e^{2 gamma L} - 1 evaluated via expm1.  gamma L > 350 would overflow
// the exponential and raises DomainError.
double qfi_gamma(const MaterialParams& m);

// Quantum Fisher information of the phase coefficient,
//   F_kappa = L^2 e^{-2 gamma L};
// stationary in L at L = 1/gamma.
double qfi_kappa(const MaterialParams& m);

}  // namespace qsup

#endif  // QSUP_MATERIAL_HPP
