#include "ptcs/quantization.hpp"

#include <cmath>

#include "ptcs/susy.hpp"

namespace ptcs {

namespace {

double stable_cot(const QuadNode& node) {
    if (node.dist_left <= node.dist_right) {
        double const th = kPi * node.dist_left;
        return std::cos(th) / std::sin(th);
    }
    double const th = kPi * node.dist_right;
    return -std::cos(th) / std::sin(th);
}

std::function<double(const QuadNode&)> profile_weight(const PSymbolTerm& term,
                                                      const PTParams& params) {
    double const nu = params.nu;
    double const hL = params.hbar * kPi / params.L;
    double const bfac = term.profile_beta / (nu + 1.0);
    switch (term.profile) {
    case QProfile::constant:
        return [](const QuadNode&) { return 1.0; };
    case QProfile::cot:
        return [](const QuadNode& n) { return stable_cot(n); };
    case QProfile::inv_sin2:
        return [](const QuadNode& n) {
            double const ct = stable_cot(n);
            return 1.0 + ct * ct;
        };
    case QProfile::superpotential:
        return [=](const QuadNode& n) { return -hL * ((nu + 1.0) * stable_cot(n) - bfac); };
    case QProfile::superpotential_sq:
        return [=](const QuadNode& n) {
            double const w = -hL * ((nu + 1.0) * stable_cot(n) - bfac);
            return w * w;
        };
    }
    throw std::invalid_argument("quadratic_form: profile outside the catalog");
}

// lambda and 1 + lambda^2 multiplications for the operator sides
SGPState mult_cot(const SGPState& st) {
    return multiply_poly(st, {Complex(0.0, 0.0), Complex(1.0, 0.0)});
}
SGPState mult_inv_sin2(const SGPState& st) {
    return multiply_poly(st, {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)});
}
SGPState kinetic(const PTParams& p, const SGPState& st) {
    return scaled(differentiate(differentiate(st)),
                  Complex(-p.hbar * p.hbar / (2.0 * p.m), 0.0));
}
SGPState add_states(const SGPState& a, const SGPState& b) {
    return subtract(a, scaled(b, Complex(-1.0, 0.0)));
}

} // namespace

std::vector<std::string> identity_catalog() {
    return {"cotQ", "moment", "hamil1", "hamil2", "hamil3", "hamil4", "generalH", "p2m"};
}

Complex quadratic_form(const PTParams& params, const PSymbol& symbol, const SGPState& phi,
                       const SGPState& psi, double tol) {
    params.validate();
    Complex total(0.0, 0.0);
    for (PSymbolTerm const& term : symbol.terms) {
        if (term.p_degree < 0 || term.p_degree > 2)
            throw std::invalid_argument("quadratic_form: p-degree outside the catalog");
        total += term.coefficient *
                 phase_space_form(params.nu, params.L, params.hbar,
                                  profile_weight(term, params), term.p_degree, phi, psi, tol);
    }
    return total;
}

VerificationReport check_identity(const std::string& name, const PTParams& params,
                                  const std::vector<std::pair<SGPState, SGPState>>& pairs,
                                  double tol) {
    params.validate();
    double const nu = params.nu;
    double const e0 = params.e0();
    double const np1sq = (nu + 1.0) * (nu + 1.0);
    double const inv2m = 1.0 / (2.0 * params.m);
    Complex const mih(0.0, -params.hbar);

    PSymbol symbol;
    double form_weight = 1.0;
    std::function<SGPState(const SGPState&)> op;
    std::string notes = "tested on the surrogate smooth class (sin exponent = nu+2+degree)";

    if (name == "cotQ") {
        symbol.terms = {{0, QProfile::cot, 1.0, 0.0}};
        op = [](const SGPState& st) { return mult_cot(st); };
    } else if (name == "moment") {
        symbol.terms = {{1, QProfile::constant, 1.0, 0.0}};
        op = [mih](const SGPState& st) { return scaled(differentiate(st), mih); };
    } else if (name == "hamil1") {
        symbol.terms = {{2, QProfile::constant, inv2m, 0.0},
                        {0, QProfile::inv_sin2, e0 * np1sq, 0.0},
                        {0, QProfile::cot, -2.0 * e0 * params.beta, 0.0}};
        PTParams const partner = partner_shift(params);
        op = [partner](const SGPState& st) { return apply_hamiltonian(partner, st); };
    } else if (name == "hamil2") {
        symbol.terms = {{2, QProfile::constant, inv2m, 0.0},
                        {0, QProfile::inv_sin2, -e0 * np1sq, 0.0}};
        op = [params, e0, np1sq](const SGPState& st) {
            return subtract(kinetic(params, st),
                            scaled(mult_inv_sin2(st), Complex(e0 * np1sq, 0.0)));
        };
    } else if (name == "hamil3") {
        symbol.terms = {{0, QProfile::inv_sin2, 1.0, 0.0}};
        form_weight = (2.0 * nu + 2.0) / (2.0 * nu + 3.0);
        op = [](const SGPState& st) { return mult_inv_sin2(st); };
    } else if (name == "hamil4") {
        symbol.terms = {{2, QProfile::constant, inv2m, 0.0},
                        {0, QProfile::inv_sin2, -e0 * np1sq / (2.0 * nu + 3.0), 0.0}};
        op = [params](const SGPState& st) { return kinetic(params, st); };
    } else if (name == "generalH") {
        symbol.terms = {{2, QProfile::constant, inv2m, 0.0},
                        {0, QProfile::inv_sin2,
                         (2.0 * nu - 1.0) / (2.0 * nu + 3.0) * e0 * np1sq, 0.0},
                        {0, QProfile::cot, -2.0 * e0 * params.beta, 0.0}};
        op = [params](const SGPState& st) { return apply_hamiltonian(params, st); };
        notes += "; q-profile read as (2nu-1)/(2nu+3) e0 (nu+1)^2 / sin^2(pi q/L)";
    } else if (name == "p2m") {
        symbol.terms = {{2, QProfile::constant, inv2m, 0.0}};
        op = [params, e0, nu](const SGPState& st) {
            return add_states(kinetic(params, st),
                              scaled(mult_inv_sin2(st), Complex(0.5 * (nu + 1.0) * e0, 0.0)));
        };
    } else {
        throw std::invalid_argument("check_identity: unknown identity '" + name + "'");
    }

    double max_resid = 0.0;
    for (auto const& [phi, psi] : pairs) {
        Complex const lhs = form_weight * quadratic_form(params, symbol, phi, psi, 0.01 * tol);
        Complex const rhs = inner_product(phi, op(psi));
        double const denom = std::max({std::abs(lhs), std::abs(rhs), 1.0});
        max_resid = std::max(max_resid, std::abs(lhs - rhs) / denom);
    }
    nlohmann::ordered_json inputs{{"nu", params.nu}, {"beta", params.beta}, {"L", params.L},
                                  {"m", params.m},   {"hbar", params.hbar},
                                  {"pairs", pairs.size()}};
    return make_residual_report("quantization." + name, std::move(inputs), max_resid, tol,
                                "plancherel-reduced form vs operator", notes);
}

std::vector<std::vector<Complex>> upper_symbol_matrix(const PTParams& params,
                                                      const PSymbol& symbol,
                                                      const std::vector<SGPState>& basis,
                                                      double tol) {
    std::vector<std::vector<Complex>> m(basis.size(), std::vector<Complex>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            m[i][j] = quadratic_form(params, symbol, basis[i], basis[j], tol);
    return m;
}

} // namespace ptcs
