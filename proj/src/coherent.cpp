#include "ptcs/coherent.hpp"

#include <cmath>

#include "ptcs/complex_gamma.hpp"

namespace ptcs {

namespace {
constexpr double kLn2 = 0.69314718055994530941723212145818;

void check_point(double L, PhasePoint pt, const char* who) {
    if (!(pt.q > 0.0) || !(pt.q < L))
        throw std::domain_error(std::string(who) + ": q outside (0, L)");
    if (!std::isfinite(pt.p))
        throw std::domain_error(std::string(who) + ": p must be finite");
}
} // namespace

Complex log_big_f(double nu, Complex z) {
    if (!(nu > -1.5))
        throw std::invalid_argument("big_f: requires nu > -3/2");
    Complex const i_z_2pi = Complex(0.0, 1.0) * z / (2.0 * kPi);
    return log_gamma_real(2.0 * nu + 3.0) + 0.5 * z - (2.0 * nu + 2.0) * kLn2 -
           log_gamma_complex(nu + 2.0 + i_z_2pi) - log_gamma_complex(nu + 2.0 - i_z_2pi);
}

Complex big_f(double nu, Complex z) { return std::exp(log_big_f(nu, z)); }

double log_big_f_shifted(double nu, double z) {
    if (std::abs(z) <= 1e8)
        return log_big_f(nu, Complex(z, 0.0)).real() - std::max(z, 0.0);
    // Stirling regime: the (pi/2)|b| parts of the two log Gamma factors cancel
    // max(z,0) exactly; what is left is the slowly varying remainder.
    return log_gamma_real(2.0 * nu + 3.0) - (2.0 * nu + 2.0) * kLn2 -
           (2.0 * nu + 3.0) * std::log(std::abs(z) / (2.0 * kPi)) -
           std::log(2.0 * kPi);
}

double normalization(double nu, double L, double q) {
    if (!(nu > -1.5))
        throw std::invalid_argument("normalization: requires nu > -3/2");
    if (!(L > 0.0) || !(q > 0.0) || !(q < L))
        throw std::domain_error("normalization: q outside (0, L)");
    double const th = kPi * q / L;
    double const lambda_q = -std::cos(th) / std::sin(th);
    double const log_n = (nu + 1.0) * kLn2 +
                         log_gamma_complex(Complex(nu + 2.0, (nu + 1.0) * lambda_q)).real() -
                         0.5 * kPi * (nu + 1.0) * lambda_q - 0.5 * std::log(L) -
                         0.5 * log_gamma_real(2.0 * nu + 3.0);
    return std::exp(log_n);
}

double normalization_from_f(double nu, double L, double q) {
    if (!(L > 0.0) || !(q > 0.0) || !(q < L))
        throw std::domain_error("normalization_from_f: q outside (0, L)");
    double const th = kPi * q / L;
    double const z = -2.0 * kPi * (nu + 1.0) * (std::cos(th) / std::sin(th));
    return std::exp(-0.5 * (std::log(L) + log_big_f(nu, Complex(z, 0.0)).real()));
}

CoherentState coherent_state(double nu, double L, PhasePoint point, double hbar) {
    if (!(nu > -1.5))
        throw std::invalid_argument("coherent_state: requires nu > -3/2");
    if (!(L > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("coherent_state: L and hbar must be positive");
    check_point(L, point, "coherent_state");

    CoherentState cs;
    cs.nu = nu;
    cs.L = L;
    cs.hbar = hbar;
    cs.point = point;
    cs.norm_const = normalization(nu, L, point.q);

    PTParams p0;
    p0.nu = nu;
    p0.L = L;
    p0.hbar = hbar;
    double const w = superpotential(p0, point.q); // beta = 0
    cs.body.s = nu + 1.0;
    cs.body.gamma = Complex(w / hbar, point.p / hbar);
    cs.body.coeffs = {Complex(cs.norm_const, 0.0)};
    cs.body.L = L;
    return cs;
}

Complex overlap(const CoherentState& a, const CoherentState& b) {
    if (a.L != b.L || a.hbar != b.hbar)
        throw std::invalid_argument("overlap: states live on different phase spaces");
    if (!(a.nu + b.nu > -3.0))
        throw std::invalid_argument("overlap: requires nu + nu' > -3");
    double const cot_a = std::cos(kPi * a.point.q / a.L) / std::sin(kPi * a.point.q / a.L);
    double const cot_b = std::cos(kPi * b.point.q / b.L) / std::sin(kPi * b.point.q / b.L);
    // L alpha / hbar with alpha = W_a + W_b + i(p_b - p_a)
    Complex const z(-kPi * ((a.nu + 1.0) * cot_a + (b.nu + 1.0) * cot_b),
                    a.L * (b.point.p - a.point.p) / a.hbar);
    Complex const log_ov = std::log(Complex(a.L, 0.0)) + std::log(Complex(a.norm_const, 0.0)) +
                           std::log(Complex(b.norm_const, 0.0)) +
                           log_big_f(0.5 * (a.nu + b.nu), z);
    return std::exp(log_ov);
}

Complex lowering_symbol_A(const PTParams& p, PhasePoint pt) {
    check_point(p.L, pt, "lowering_symbol_A");
    return Complex(superpotential(p, pt.q), pt.p);
}

double lowering_symbol_H(const PTParams& p, PhasePoint pt) {
    check_point(p.L, pt, "lowering_symbol_H");
    double const th = kPi * pt.q / p.L;
    double const s = std::sin(th);
    return pt.p * pt.p / (2.0 * p.m) + p.e0() * (p.nu + 1.0) * (p.nu + 1.0) / (s * s) -
           2.0 * p.e0() * p.beta * (std::cos(th) / s);
}

double lowering_symbol_invsin2(double nu, double L, PhasePoint pt) {
    if (!(nu > -0.5))
        throw std::invalid_argument("lowering_symbol_invsin2: requires nu > -1/2");
    check_point(L, pt, "lowering_symbol_invsin2");
    double const s = std::sin(kPi * pt.q / L);
    return (2.0 * nu + 2.0) / (2.0 * nu + 1.0) / (s * s);
}

double lowering_symbol_kinetic(const PTParams& p, PhasePoint pt) {
    if (!(p.nu > -0.5))
        throw std::invalid_argument("lowering_symbol_kinetic: requires nu > -1/2");
    check_point(p.L, pt, "lowering_symbol_kinetic");
    double const s = std::sin(kPi * pt.q / p.L);
    return pt.p * pt.p / (2.0 * p.m) +
           p.e0() * (p.nu + 1.0) * (p.nu + 1.0) / ((2.0 * p.nu + 1.0) * (s * s));
}

} // namespace ptcs
