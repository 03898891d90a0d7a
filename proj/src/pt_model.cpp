#include "ptcs/pt_model.hpp"

#include <cmath>
#include <string>

#include "ptcs/sgp_state.hpp"

namespace ptcs {

void PTParams::validate() const {
    if (!(L > 0.0) || !(m > 0.0) || !(hbar > 0.0))
        throw std::invalid_argument("PTParams: L, m, hbar must be positive");
    if (!(nu > -1.5))
        throw std::invalid_argument("PTParams: nu must exceed -3/2");
    if (!std::isfinite(beta))
        throw std::invalid_argument("PTParams: beta must be finite");
}

namespace {
void check_open_interval(const PTParams& p, double x, const char* who) {
    if (!(x > 0.0) || !(x < p.L))
        throw std::domain_error(std::string(who) + ": x outside (0, L)");
}
} // namespace

double potential(const PTParams& p, double x) {
    check_open_interval(p, x, "potential");
    double const th = kPi * x / p.L;
    double const s = std::sin(th);
    return p.e0() * (p.nu * (p.nu + 1.0) / (s * s) - 2.0 * p.beta * (std::cos(th) / s));
}

double superpotential(const PTParams& p, double x) {
    check_open_interval(p, x, "superpotential");
    double const th = kPi * x / p.L;
    return -(p.hbar * kPi / p.L) *
           ((p.nu + 1.0) * (std::cos(th) / std::sin(th)) - p.beta / (p.nu + 1.0));
}

EnergyLevel energy(const PTParams& p, int n) {
    if (n < 0)
        throw std::invalid_argument("energy: n must be >= 0");
    double const w = p.nu + n + 1.0;
    return EnergyLevel{n, p.e0() * (w * w - p.beta * p.beta / (w * w))};
}

double f_seq(const PTParams& p, int n) {
    return (energy(p, n).value - energy(p, 0).value) / p.e0();
}

SGPState ground_state(const PTParams& p) {
    p.validate();
    if (!(p.nu > -1.0))
        throw std::invalid_argument("ground_state: requires nu > -1");
    SGPState st;
    st.s = p.nu + 1.0;
    st.gamma = Complex(-p.beta * kPi / (p.L * (p.nu + 1.0)), 0.0);
    st.coeffs = {Complex(1.0, 0.0)};
    st.L = p.L;
    return normalized(st);
}

SGPState gegenbauer_state(double nu, int n, double L) {
    if (!(nu > -1.0))
        throw std::invalid_argument("gegenbauer_state: requires nu > -1");
    if (n < 0 || n > 30)
        throw std::invalid_argument("gegenbauer_state: n must be in [0, 30]");
    if (!(L > 0.0))
        throw std::invalid_argument("gegenbauer_state: L must be positive");

    // monomial coefficients of C_n^{nu+1} by the three-term recurrence
    double const alpha = nu + 1.0;
    std::vector<double> cm2{1.0};
    std::vector<double> cm1{0.0, 2.0 * alpha};
    std::vector<double> cn = (n == 0) ? cm2 : cm1;
    for (int k = 2; k <= n; ++k) {
        cn.assign(k + 1, 0.0);
        for (int j = 0; j + 1 <= k; ++j)
            cn[j + 1] += 2.0 * (k + alpha - 1.0) * cm1[j] / k;
        for (int j = 0; j < static_cast<int>(cm2.size()); ++j)
            cn[j] -= (k + 2.0 * alpha - 2.0) * cm2[j] / k;
        cm2 = cm1;
        cm1 = cn;
    }

    // sin^{nu+1} sum_k a_k cos^k  ->  sin^{nu+n+1} sum_k a_k lambda^k (1+lambda^2)^{(n-k)/2}
    // (C_n has strict parity, so n-k is even wherever a_k != 0)
    std::vector<Complex> poly(n + 1, Complex(0.0, 0.0));
    for (int k = 0; k <= n; ++k) {
        if (cn[k] == 0.0 || (n - k) % 2 != 0)
            continue;
        int const m = (n - k) / 2;
        double binom = 1.0;
        for (int j = 0; j <= m; ++j) {
            poly[k + 2 * j] += cn[k] * binom;
            binom *= static_cast<double>(m - j) / (j + 1.0);
        }
    }

    SGPState st;
    st.s = nu + n + 1.0;
    st.gamma = Complex(0.0, 0.0);
    st.coeffs = std::move(poly);
    st.L = L;
    st = normalized(trimmed(std::move(st)));
    if (st.coeffs.back().real() < 0.0)
        st = scaled(st, Complex(-1.0, 0.0));
    return st;
}

} // namespace ptcs
