#pragma once

#include "ptcs/pt_model.hpp"
#include "ptcs/sgp_state.hpp"

namespace ptcs {

struct PhasePoint {
    double q; // in (0, L)
    double p;
};

// F_nu(z) = integral_0^1 sin^{2nu+2}(pi x) e^{z x} dx in closed form:
// Gamma(2nu+3) e^{z/2} / (4^{nu+1} Gamma(nu+2+iz/2pi) Gamma(nu+2-iz/2pi)).
// log_big_f is the log of that expression (real for real z).
Complex big_f(double nu, Complex z);
Complex log_big_f(double nu, Complex z);

// log F_nu(z) - max(z, 0) for real z, stable for |z| up to ~1e300: the
// phase-space engines subtract the window shift from log N^2 analytically,
// where forming log F and the shift separately would cancel to noise.
double log_big_f_shifted(double nu, double z);

// N_nu(q) = 2^{nu+1} |Gamma(nu+2 + i(nu+1)lambda_q)| e^{-(pi/2)(nu+1)lambda_q}
//           / (sqrt(L) sqrt(Gamma(2nu+3))),   lambda_q = -cot(pi q/L).
double normalization(double nu, double L, double q);
// The equivalent form 1/sqrt(L F_nu(2 W_{nu,0}(q) L / hbar)).
double normalization_from_f(double nu, double L, double q);

// Normalized eigenstate of the lowering operator at z = W_{nu,0}(q) + ip;
// the beta dependence cancels in the construction, so the family carries
// only (nu, L, q, p).
struct CoherentState {
    double nu;
    double L;
    double hbar;
    PhasePoint point;
    double norm_const; // N_nu(q)
    SGPState body;     // unit L2 norm
};

CoherentState coherent_state(double nu, double L, PhasePoint point, double hbar = 1.0);

// <a, b> = L N_nu(q) N_nu'(q') F_{(nu+nu')/2}(L alpha / hbar),
// alpha = W_{nu,0}(q) + W_{nu',0}(q') + i (p' - p).
Complex overlap(const CoherentState& a, const CoherentState& b);

// Expectation values in the coherent states (lower symbols), closed forms.
Complex lowering_symbol_A(const PTParams& p, PhasePoint pt);       // W_{nu,beta}(q) + ip
double lowering_symbol_H(const PTParams& p, PhasePoint pt);        // p^2/2m + e0(nu+1)^2/sin^2 - 2 e0 beta cot
double lowering_symbol_invsin2(double nu, double L, PhasePoint pt); // (2nu+2)/(2nu+1) / sin^2(pi q/L)
double lowering_symbol_kinetic(const PTParams& p, PhasePoint pt);  // p^2/2m + e0(nu+1)^2/((2nu+1) sin^2)

} // namespace ptcs
