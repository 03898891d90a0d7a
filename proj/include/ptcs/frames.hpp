#pragma once

#include <functional>
#include <vector>

#include "ptcs/coherent.hpp"
#include "ptcs/report.hpp"
#include "ptcs/sgp_state.hpp"

namespace ptcs {

// Core phase-space reduction. For f(q,p) = w(q) p^k the p-integral of
// B_f collapses by Plancherel onto the windowed states
// f_q = sin^{nu+1}(pi x/L) e^{W_{nu,0}(q) x/hbar} psi, giving
//
//   integral_0^L dq w(q) N_nu^2(q) < f_q^phi, (-i hbar d/dx)^k f_q^psi >.
//
// The q integrand is assembled in log-scaled form (N^2 shrinks exactly as
// fast as the windowed bracket grows near the endpoints), so arbitrarily
// deep quadrature nodes stay representable. w receives the q node in
// t = q/L units.
Complex phase_space_form(double nu, double L, double hbar,
                         const std::function<double(const QuadNode&)>& weight, int k,
                         const SGPState& phi, const SGPState& psi, double tol);

enum class ResolutionStrategy { parseval, direct2d };

// Checks integral |<eta_{q,p}, psi>|^2 dq dp/(2 pi hbar) = ||psi||^2 (= 1).
// parseval reduces the p integral exactly; direct2d truncates |p| <= P_max
// (P bound from the second-moment tail estimate, recorded in the notes) and
// quadratures both phase-space directions.
VerificationReport verify_resolution(double nu, double L, const SGPState& psi,
                                     ResolutionStrategy strategy, double tol,
                                     double hbar = 1.0);

// psi_n(q,p) = <eta_{q,p}, phi_n>
Complex frame_function(double nu, const PTParams& params, int n, PhasePoint point,
                       double hbar = 1.0);

// Verifies K(a;c) = integral K(a;b) K(b;c) db/(2 pi hbar) over the sampled
// pairs; the p_b integral is reduced by Plancherel, the rest is quadrature.
// Reports the maximum residual over all ordered pairs.
VerificationReport kernel_reproducing_check(double nu, double L,
                                            const std::vector<PhasePoint>& sample_points,
                                            double tol, double hbar = 1.0);

} // namespace ptcs
