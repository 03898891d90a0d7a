#pragma once

#include "ptcs/base.hpp"

namespace ptcs {

struct SGPState;

// Physical configuration of the trigonometric Poschl-Teller problem on (0,L).
// e0 is the infinite-well zero-point energy and is always derived, never stored.
struct PTParams {
    double nu = 0.0;
    double beta = 0.0;
    double L = 1.0;
    double m = 1.0;
    double hbar = 1.0;

    double e0() const { return hbar * hbar * kPi * kPi / (2.0 * m * L * L); }
    void validate() const;
};

struct EnergyLevel {
    int n;
    double value;
};

// V(x) = e0 nu(nu+1)/sin^2(pi x/L) - 2 e0 beta cot(pi x/L), 0 < x < L.
double potential(const PTParams& p, double x);

// W(x) = -(hbar pi/L) ((nu+1) cot(pi x/L) - beta/(nu+1)).
double superpotential(const PTParams& p, double x);

// E_n = e0 ((n+nu+1)^2 - beta^2/(n+nu+1)^2).
EnergyLevel energy(const PTParams& p, int n);

// f_n = (E_n - E_0)/e0, computed on the same arithmetic path as energy().
double f_seq(const PTParams& p, int n);

// Normalized ground state sin^{nu+1}(pi x/L) exp(-beta pi x/(L(nu+1))),
// positive on (0,L). Normalization is by quadrature.
SGPState ground_state(const PTParams& p);

// beta = 0 eigenstates through the Gegenbauer closed form
// sin^{nu+1}(pi x/L) C_n^{nu+1}(cos(pi x/L)); independent cross-check of the
// SUSY chain. Three-term recurrence, n <= 30.
SGPState gegenbauer_state(double nu, int n, double L);

} // namespace ptcs
