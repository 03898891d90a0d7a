#pragma once

#include <functional>

#include "ptcs/base.hpp"

namespace ptcs {

// A node of a rule on (0,1). dist_left/dist_right are the distances to the
// endpoints in a cancellation-free representation: tanh-sinh abscissas get
// exponentially close to the endpoints and 1-x would round to 0 long before
// the weighted contribution becomes negligible. Integrands that are singular
// or steep at an endpoint must evaluate through these distances
// (sin(pi*(1-d)) == sin(pi*d), cos(pi*(1-d)) == -cos(pi*d)).
struct QuadNode {
    double x;
    double dist_left;
    double dist_right;
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0; // absolute
    long long evaluations = 0;
    double tail_bound = 0.0; // line rules only: bound on the truncated tail
};

enum class IntegrandShape { smooth, endpoint_singular };

using NodeIntegrand = std::function<Complex(const QuadNode&)>;

// Integral over (0,1). 'smooth' uses composite Gauss-Legendre with panel
// doubling; 'endpoint_singular' uses tanh-sinh. Both sum node contributions
// in fixed ascending order with compensated summation, so repeated calls are
// bit-identical. Converges when successive refinements agree to
// max(tol, 1e-14*|I|); throws convergence_error past the node budget and
// std::domain_error if the integrand returns a non-finite value.
QuadratureResult integrate_interval(const NodeIntegrand& f, double tol,
                                    IntegrandShape shape = IntegrandShape::smooth);
QuadratureResult integrate_interval(const std::function<Complex(double)>& f, double tol,
                                    IntegrandShape shape = IntegrandShape::smooth);

// Integral over the real line for integrands with |f(k)| <~ M e^{-decay_rate |k|}.
// Truncates at |k| <= K with K chosen so the analytic tail bound sits below
// tol/10; the realised bound (from samples at +-K) is added to error_estimate
// and reported in tail_bound.
QuadratureResult integrate_line(const std::function<Complex(double)>& f, double tol,
                                double decay_rate);

// Fixed 512-point interior Gauss grid L2 norm of |g| on (0,1), scaled by
// sqrt(scale). Used for residual norms of states that are zero up to rounding
// noise (a true adaptive L2 of pure noise with an endpoint-singular
// representation is ill-posed).
double fixed_grid_l2(const NodeIntegrand& g_abs2, double scale);

} // namespace ptcs
