#pragma once

#include "ptcs/coherent.hpp"

namespace ptcs {

// Large-L limit on the symmetric interval [-L/2, L/2] (beta = 0): the
// superpotential linearizes, W_nu(x) ~ (nu+1) hbar pi^2 x / L^2, and the
// coherent state degenerates into the Gaussian
//   amplitude * exp(-(nu+1) pi^2 x^2/(2L^2) + (nu+1) pi^2 q x/L^2 + i p x/hbar).
struct GaussianApprox {
    double center;
    double width;     // L / (pi sqrt(nu+1))
    double momentum;
    double amplitude; // 2^{nu+1} Gamma(nu+2) / (sqrt(L) sqrt(Gamma(2nu+3)))
};

// point.q is the translated coordinate (interval centered at 0), |q| << L.
GaussianApprox harmonic_approx(double nu, double L, PhasePoint point);

struct LimitFidelity {
    double value;            // |<eta, gaussian>|^2 / (norms), in [0,1]
    bool precondition_ok;    // |q| <= L/10
};

LimitFidelity limit_fidelity_report(double nu, double L, PhasePoint point, double hbar = 1.0);
double limit_fidelity(double nu, double L, PhasePoint point, double hbar = 1.0);

// Fits C in |W_nu(x) - (nu+1) hbar pi^2 x/L^2| <= C |x|^3 / L^4 over
// |x| <= L/10 and returns the pair (C, max scaled violation ratio <= 1).
double superpotential_linearization_constant(double nu, double L, double hbar = 1.0);

} // namespace ptcs
