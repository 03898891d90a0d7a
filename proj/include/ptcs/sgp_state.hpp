#pragma once

#include <vector>

#include <json.hpp>

#include "ptcs/base.hpp"
#include "ptcs/pt_model.hpp"
#include "ptcs/quadrature.hpp"

namespace ptcs {

// sin^s(pi x/L) * exp(gamma x) * P(lambda), lambda = cot(pi x/L).
// Every wavefunction in the library lives in this family; it is closed under
// d/dx, the ladder operators and the Hamiltonian. Near the endpoints the
// state behaves like x^{s - degree}, so the polynomial degree is part of the
// integrability bookkeeping.
struct SGPState {
    double s = 0.0;
    Complex gamma{0.0, 0.0};
    std::vector<Complex> coeffs{Complex{0.0, 0.0}}; // ascending powers of lambda
    double L = 1.0;
};

int degree(const SGPState& st);
bool is_zero(const SGPState& st);

// Drops trailing coefficients below 1e-14 * max|coeff| (keeps at least one).
SGPState trimmed(SGPState st);

SGPState scaled(const SGPState& st, Complex factor);
// a - b; requires matching (s, gamma, L).
SGPState subtract(const SGPState& a, const SGPState& b);
// state * Q(lambda)
SGPState multiply_poly(const SGPState& st, const std::vector<Complex>& q);

// Value at x in (0,L), evaluated in the mixed form
// sum_j c_j cos^j(pi x/L) sin^{s-j}(pi x/L) e^{gamma x}.
// Throws std::domain_error outside (0,L) and std::overflow_error when
// s < degree and x is within 1e-12 L of an endpoint.
Complex evaluate(const SGPState& st, double x);
// Endpoint-stable variant; node coordinates are x/L.
Complex evaluate_node(const SGPState& st, const QuadNode& node);

// Exact calculus on the family.
SGPState differentiate(const SGPState& st);
SGPState apply_lowering(const PTParams& p, const SGPState& st);     // A = W + hbar d/dx
SGPState apply_raising(const PTParams& p, const SGPState& st);      // A+ = W - hbar d/dx
SGPState apply_hamiltonian(const PTParams& p, const SGPState& st);  // -(hbar^2/2m) d^2/dx^2 + V

// integral_0^L conj(a) b dx in scaled form (mantissa * e^{log_scale});
// callers that window states with large exponential rates combine the scale
// with log N^2 analytically.
ScaledComplex sgp_pair_scaled(const SGPState& a, const SGPState& b, double tol_value = 1e-12);

// Plain inner product <a,b> = integral conj(a) b. Throws std::domain_error
// when the minimal mixed sin exponent is <= -1 (non-integrable).
Complex inner_product(const SGPState& a, const SGPState& b, double tol = 1e-12);
double l2_norm(const SGPState& st, double tol = 1e-13);
SGPState normalized(const SGPState& st);

// Fixed-grid L2 norm; stable for residual states that vanish up to rounding.
double residual_norm(const SGPState& st);

nlohmann::ordered_json to_json(const SGPState& st);
SGPState sgp_from_json(const nlohmann::json& j);

} // namespace ptcs
