#include "qsup/material.hpp"

namespace qsup {

MaterialParams::MaterialParams(double gamma_, double kappa_, double length_)
    : gamma(gamma_), kappa(kappa_), length(length_) {
  if (!(gamma > 0.0)) {
    throw DomainError("MaterialParams: attenuation must be > 0");
  }
  if (!(length > 0.0)) {
    throw DomainError("MaterialParams: path length must be > 0");
  }
  if (!std::isfinite(kappa)) {
    throw DomainError("MaterialParams: phase coefficient must be finite");
  }
}

double qfi_gamma(const MaterialParams& m) {
  double exponent = 2.0 * m.gamma * m.length;
  if (exponent > 700.0) {
    throw DomainError("qfi_gamma: gamma * L too large, e^{2 gamma L} overflows");
  }
  return m.length * m.length / std::expm1(exponent);
}

double qfi_kappa(const MaterialParams& m) {
  return m.length * m.length * std::exp(-2.0 * m.gamma * m.length);
}

}  // namespace qsup
