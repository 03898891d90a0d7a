#include "ptcs/susy.hpp"

#include <cmath>

namespace ptcs {

PTParams partner_shift(const PTParams& p) {
    PTParams out = p;
    out.nu = p.nu + 1.0;
    return out;
}

namespace {

PTParams with_nu(const PTParams& p, double nu) {
    PTParams out = p;
    out.nu = nu;
    return out;
}

// Raw chain state (no sign fix): unit norm up to rounding drift.
SGPState chain_state(const PTParams& p, int n, double* drift) {
    if (n < 0 || n > 30)
        throw std::invalid_argument("eigenstate: n must be in [0, 30]");
    SGPState st = ground_state(with_nu(p, p.nu + n));
    double logfac = 0.0;
    for (int j = n - 1; j >= 0; --j)
        st = apply_raising(with_nu(p, p.nu + j), st);
    for (int k = 1; k <= n; ++k)
        logfac += std::log(2.0 * p.m * p.e0() * f_seq(with_nu(p, p.nu + n - k), k));
    st = scaled(st, Complex(std::exp(-0.5 * logfac), 0.0));
    double const nrm = l2_norm(st);
    if (drift)
        *drift = std::abs(nrm - 1.0);
    return scaled(st, Complex(1.0 / nrm, 0.0));
}

} // namespace

EigenstateResult eigenstate_with_drift(const PTParams& p, int n) {
    EigenstateResult res;
    res.state = chain_state(p, n, &res.norm_drift);
    if (res.state.coeffs.back().real() < 0.0)
        res.state = scaled(res.state, Complex(-1.0, 0.0));
    return res;
}

SGPState eigenstate(const PTParams& p, int n) { return eigenstate_with_drift(p, n).state; }

VerificationReport check_intertwining(const PTParams& p, int n, double tol) {
    if (n < 0)
        throw std::invalid_argument("check_intertwining: n must be >= 0");
    SGPState const hi = chain_state(p, n + 1, nullptr);
    SGPState const lo = chain_state(partner_shift(p), n, nullptr);
    double const coeff = std::sqrt(2.0 * p.m * p.e0() * f_seq(p, n + 1));
    SGPState const resid = subtract(apply_lowering(p, hi), scaled(lo, Complex(coeff, 0.0)));
    nlohmann::ordered_json inputs{{"nu", p.nu}, {"beta", p.beta}, {"L", p.L},
                                  {"m", p.m},   {"hbar", p.hbar}, {"n", n},
                                  {"coefficient", coeff}};
    return make_residual_report("susy.intertwining", std::move(inputs), residual_norm(resid), tol);
}

VerificationReport check_factorization(const PTParams& p, const SGPState& st, double tol) {
    if (st.s < 1.0)
        throw std::invalid_argument("check_factorization: requires sin exponent >= 1");
    SGPState lhs = apply_hamiltonian(p, st);
    SGPState aa = apply_raising(p, apply_lowering(p, st));
    aa = scaled(aa, Complex(1.0 / (2.0 * p.m), 0.0));
    double const e_ground = energy(p, 0).value;
    SGPState rhs = aa;
    {
        SGPState e_term = scaled(st, Complex(e_ground, 0.0));
        rhs.coeffs.resize(std::max(rhs.coeffs.size(), e_term.coeffs.size()), Complex(0.0, 0.0));
        for (std::size_t j = 0; j < e_term.coeffs.size(); ++j)
            rhs.coeffs[j] += e_term.coeffs[j];
    }
    double const rel = residual_norm(subtract(lhs, rhs)) / std::max(residual_norm(st), 1e-300);
    nlohmann::ordered_json inputs{{"nu", p.nu},   {"beta", p.beta},        {"L", p.L},
                                  {"m", p.m},     {"hbar", p.hbar},        {"s", st.s},
                                  {"degree", degree(st)}};
    return make_residual_report("susy.factorization", std::move(inputs), rel, tol);
}

} // namespace ptcs
