#pragma once

#include "p2e/rational.hpp"

namespace p2e {

/// Closed-form sin-power coefficient of the normal-angle series,
/// (phi-psi)/(cos psi sin psi) = sum d[n,k,l] e2^l rho^-k sin^2n(psi).
/// Valid window: n >= 0, k >= 1, max(n+1,k) <= l <= n+k; throws
/// std::domain_error outside it.
Rational gen_d_phi(int n, int k, int l);

/// Closed-form Fourier coefficient of the normal-angle series,
/// phi-psi = sum c[n,k,l] e2^l rho^-k sin(2n psi).
/// Valid window: n >= 1, k >= 1, l >= max(n,k); throws std::domain_error
/// outside it.
Rational gen_c_phi(int n, int k, int l);

}  // namespace p2e
