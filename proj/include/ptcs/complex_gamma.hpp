#pragma once

#include "ptcs/base.hpp"

namespace ptcs {

// log Gamma(z), continuous on the plane cut along the negative real axis.
// Lanczos (g = 607/128, 14 terms) for Re z >= 1/2; reflection with a
// branch-tracking log sin(pi z) otherwise. Relative accuracy of exp(result)
// is ~1e-15 away from the poles.
// Throws std::domain_error when z is within 1e-12 of a non-positive integer.
Complex log_gamma_complex(Complex z);

// log Gamma(x) for real x > 0, same Lanczos kernel (keeps all Gamma values
// in the library on one arithmetic path).
double log_gamma_real(double x);

} // namespace ptcs
