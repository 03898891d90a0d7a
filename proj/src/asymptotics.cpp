#include "ptcs/asymptotics.hpp"

#include <cmath>

#include "ptcs/complex_gamma.hpp"
#include "ptcs/quadrature.hpp"

namespace ptcs {

GaussianApprox harmonic_approx(double nu, double L, PhasePoint point) {
    if (!(nu > -1.0) || !(L > 0.0))
        throw std::invalid_argument("harmonic_approx: requires nu > -1 and L > 0");
    GaussianApprox g;
    g.center = point.q;
    g.width = L / (kPi * std::sqrt(nu + 1.0));
    g.momentum = point.p;
    g.amplitude = std::exp((nu + 1.0) * std::log(2.0) + log_gamma_real(nu + 2.0) -
                           0.5 * std::log(L) - 0.5 * log_gamma_real(2.0 * nu + 3.0));
    return g;
}

LimitFidelity limit_fidelity_report(double nu, double L, PhasePoint point, double hbar) {
    if (!(nu > -1.0) || !(L > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("limit_fidelity: requires nu > -1, L > 0, hbar > 0");
    if (!(std::abs(point.q) < 0.5 * L))
        throw std::domain_error("limit_fidelity: translated q outside (-L/2, L/2)");

    double const np1 = nu + 1.0;
    double const w_q = (hbar * kPi / L) * np1 * std::tan(kPi * point.q / L);
    double const kappa = np1 * kPi * kPi / (L * L);

    // x = L (t - 1/2); cos(pi x / L) = sin(pi t), endpoint-stable through the node
    auto eta = [&](const QuadNode& n) {
        double const x = L * (n.x - 0.5);
        double const sin_t = std::sin(kPi * std::min(n.dist_left, n.dist_right));
        return std::pow(sin_t, np1) * std::exp(Complex(w_q * x / hbar, point.p * x / hbar));
    };
    auto gauss = [&](const QuadNode& n) {
        double const x = L * (n.x - 0.5);
        return std::exp(Complex(-0.5 * kappa * x * x + kappa * point.q * x,
                                point.p * x / hbar));
    };

    double const tol = 1e-12;
    auto shape = IntegrandShape::endpoint_singular;
    Complex const ov =
        integrate_interval([&](const QuadNode& n) { return std::conj(eta(n)) * gauss(n); },
                           tol, shape)
            .value;
    double const n_eta =
        integrate_interval([&](const QuadNode& n) { return Complex(std::norm(eta(n)), 0.0); },
                           tol, shape)
            .value.real();
    double const n_gauss =
        integrate_interval([&](const QuadNode& n) { return Complex(std::norm(gauss(n)), 0.0); },
                           tol, shape)
            .value.real();

    LimitFidelity out;
    out.value = std::norm(ov) / (n_eta * n_gauss);
    out.value = std::min(1.0, std::max(0.0, out.value));
    out.precondition_ok = std::abs(point.q) <= 0.1 * L;
    return out;
}

double limit_fidelity(double nu, double L, PhasePoint point, double hbar) {
    return limit_fidelity_report(nu, L, point, hbar).value;
}

double superpotential_linearization_constant(double nu, double L, double hbar) {
    double const np1 = nu + 1.0;
    double c = 0.0;
    for (int i = 1; i <= 200; ++i) {
        double const x = (0.1 * L) * i / 200.0;
        double const w = (hbar * kPi / L) * np1 * std::tan(kPi * x / L);
        double const lin = np1 * hbar * kPi * kPi * x / (L * L);
        c = std::max(c, std::abs(w - lin) * L * L * L * L / (x * x * x));
    }
    return c;
}

} // namespace ptcs
