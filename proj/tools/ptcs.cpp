// ptcs - Poschl-Teller coherent state toolkit.
// Subcommands: eigen (spectrum tables), verify (identity suites), cs
// (coherent-state profiles), limit (harmonic-limit sweeps), symbols
// (lower-symbol grids), matrix (quantized forms in a basis).
// Exit codes: 0 success/all-pass, 1 verification failure, 2 usage or domain
// error, 3 numeric non-convergence.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptcs/asymptotics.hpp"
#include "ptcs/coherent.hpp"
#include "ptcs/complex_gamma.hpp"
#include "ptcs/frames.hpp"
#include "ptcs/pt_model.hpp"
#include "ptcs/quantization.hpp"
#include "ptcs/random_states.hpp"
#include "ptcs/report.hpp"
#include "ptcs/sgp_state.hpp"
#include "ptcs/susy.hpp"

using namespace ptcs;
using nlohmann::ordered_json;

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

struct CommonOpts {
    double nu = 0.0, beta = 0.0, length = 1.0, mass = 1.0, hbar = 1.0;
    double tol = 1e-8;
    unsigned long long seed = 1;
    std::string out;
    std::string format = "csv";

    PTParams params() const {
        PTParams p;
        p.nu = nu;
        p.beta = beta;
        p.L = length;
        p.m = mass;
        p.hbar = hbar;
        p.validate();
        return p;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--nu", o.nu, "potential strength parameter");
    cmd->add_option("--beta", o.beta, "asymmetry parameter");
    cmd->add_option("--length", o.length, "interval length L");
    cmd->add_option("--mass", o.mass, "particle mass");
    cmd->add_option("--hbar", o.hbar, "reduced Planck constant");
    cmd->add_option("--tol", o.tol, "verification tolerance");
    cmd->add_option("--seed", o.seed, "seed for random test states");
    cmd->add_option("--out", o.out, "output path (default: stdout)");
    cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

// ----------------------------------------------------------------- eigen ---

int cmd_eigen(const CommonOpts& o, int n_max, int grid) {
    if (n_max < 0 || n_max > 30)
        throw std::domain_error("eigen: n-max must be in [0, 30]");
    if (grid < 0)
        throw std::domain_error("eigen: grid must be >= 0");
    PTParams const p = o.params();

    if (o.format == "json") {
        ordered_json j;
        j["params"] = {{"nu", p.nu}, {"beta", p.beta}, {"L", p.L}, {"m", p.m}, {"hbar", p.hbar}};
        ordered_json levels = ordered_json::array();
        for (int n = 0; n <= n_max; ++n) {
            ordered_json entry;
            entry["n"] = n;
            entry["E"] = energy(p, n).value;
            entry["state"] = to_json(eigenstate(p, n));
            levels.push_back(std::move(entry));
        }
        j["levels"] = std::move(levels);
        write_output(o.out, j.dump(2) + "\n");
        return 0;
    }

    std::ostringstream csv;
    csv << "n,E";
    for (int g = 1; g <= grid; ++g)
        csv << ",psi_" << g;
    csv << "\n";
    if (grid > 0) {
        for (int n = 0; n <= n_max; ++n) {
            SGPState const st = eigenstate(p, n);
            csv << n << "," << fmt17(energy(p, n).value);
            for (int g = 1; g <= grid; ++g)
                csv << "," << fmt17(evaluate(st, p.L * g / (grid + 1)).real());
            csv << "\n";
        }
    }
    write_output(o.out, csv.str());
    return 0;
}

// ---------------------------------------------------------------- verify ---

std::vector<VerificationReport> suite_unity(const PTParams& p, double tol, std::mt19937_64& rng) {
    std::vector<VerificationReport> reports;
    PTParams ps = p;
    ps.nu = std::max(p.nu, 0.0); // state parameters; the frame level may sit below 0
    SGPState const gs = ground_state(ps);
    reports.push_back(verify_resolution(p.nu, p.L, gs, ResolutionStrategy::parseval, tol, p.hbar));
    reports.push_back(
        verify_resolution(p.nu, p.L, eigenstate(ps, 2), ResolutionStrategy::parseval, tol, p.hbar));
    reports.push_back(verify_resolution(p.nu, p.L, random_form_domain_state(ps, rng),
                                        ResolutionStrategy::parseval, tol, p.hbar));
    reports.push_back(verify_resolution(p.nu, p.L, gs, ResolutionStrategy::direct2d,
                                        std::max(tol, 1e-3), p.hbar));
    return reports;
}

std::vector<VerificationReport> suite_susy(const PTParams& p, double tol, std::mt19937_64& rng) {
    std::vector<VerificationReport> reports;
    for (int n = 0; n <= 4; ++n)
        reports.push_back(check_intertwining(p, n, tol));
    for (int n = 0; n <= 3; ++n)
        reports.push_back(check_factorization(p, eigenstate(p, n), tol));
    reports.push_back(check_factorization(p, random_sgp_state(p.nu + 1.0, p.L, rng),
                                          std::max(tol, 1e-9)));

    double max_eig_resid = 0.0;
    for (int n = 0; n <= 5; ++n) {
        SGPState const st = eigenstate(p, n);
        SGPState const resid =
            subtract(apply_hamiltonian(p, st), scaled(st, Complex(energy(p, n).value, 0.0)));
        max_eig_resid =
            std::max(max_eig_resid, residual_norm(resid) / std::abs(energy(p, n).value));
    }
    reports.push_back(make_residual_report(
        "susy.eigen_residual", ordered_json{{"nu", p.nu}, {"beta", p.beta}, {"n_max", 5}},
        max_eig_resid, tol));

    double max_gram = 0.0;
    std::vector<SGPState> basis;
    for (int n = 0; n <= 5; ++n)
        basis.push_back(eigenstate(p, n));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Complex const g = inner_product(basis[i], basis[j]);
            max_gram = std::max(max_gram, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    reports.push_back(make_residual_report(
        "susy.orthonormality", ordered_json{{"nu", p.nu}, {"beta", p.beta}, {"n_max", 5}},
        max_gram, std::max(tol, 1e-9)));
    return reports;
}

std::vector<VerificationReport> suite_identities(const PTParams& p, double tol,
                                                 std::mt19937_64& rng) {
    std::vector<std::pair<SGPState, SGPState>> pairs;
    for (int i = 0; i < 3; ++i)
        pairs.emplace_back(random_form_domain_state(p, rng), random_form_domain_state(p, rng));
    std::vector<VerificationReport> reports;
    for (auto const& name : identity_catalog())
        reports.push_back(check_identity(name, p, pairs, tol));
    return reports;
}

std::vector<VerificationReport> suite_symbols(const PTParams& p, double tol) {
    std::vector<VerificationReport> reports;
    double max_a = 0.0, max_h = 0.0, max_s = 0.0, max_k = 0.0;
    for (int iq = 1; iq <= 5; ++iq) {
        for (int ip = -2; ip <= 2; ++ip) {
            PhasePoint const pt{p.L * iq / 6.0, 2.0 * kPi * p.hbar * ip / p.L};
            CoherentState const cs = coherent_state(p.nu, p.L, pt, p.hbar);
            Complex const a_quad = inner_product(cs.body, apply_lowering(p, cs.body));
            max_a = std::max(max_a, std::abs(a_quad - lowering_symbol_A(p, pt)));
            Complex const h_quad = inner_product(cs.body, apply_hamiltonian(p, cs.body));
            max_h = std::max(max_h, std::abs(h_quad - lowering_symbol_H(p, pt)) /
                                        std::abs(lowering_symbol_H(p, pt)));
            Complex const s_quad = inner_product(
                cs.body,
                multiply_poly(cs.body, {Complex(1.0, 0.0), Complex(0.0, 0.0), Complex(1.0, 0.0)}));
            max_s = std::max(max_s, std::abs(s_quad - lowering_symbol_invsin2(p.nu, p.L, pt)) /
                                        std::abs(lowering_symbol_invsin2(p.nu, p.L, pt)));
            SGPState const kin = scaled(differentiate(differentiate(cs.body)),
                                        Complex(-p.hbar * p.hbar / (2.0 * p.m), 0.0));
            Complex const k_quad = inner_product(cs.body, kin);
            max_k = std::max(max_k, std::abs(k_quad - lowering_symbol_kinetic(p, pt)) /
                                        std::abs(lowering_symbol_kinetic(p, pt)));
        }
    }
    ordered_json inputs{{"nu", p.nu}, {"beta", p.beta}, {"grid", "5x5"}};
    reports.push_back(make_residual_report("coherent.symbol_A", inputs, max_a, tol));
    reports.push_back(make_residual_report("coherent.symbol_H", inputs, max_h, tol));
    reports.push_back(make_residual_report("coherent.symbol_invsin2", inputs, max_s, tol));
    reports.push_back(make_residual_report("coherent.symbol_kinetic", inputs, max_k, tol));
    return reports;
}

std::vector<VerificationReport> suite_appendix(const PTParams& p) {
    std::vector<VerificationReport> reports;
    double max_a = 0.0;
    for (double nu : {0.0, 0.5, 1.0, 2.5}) {
        for (double re : {-20.0, -10.0, 0.0, 10.0, 20.0}) {
            for (double im : {-20.0, -10.0, 0.0, 10.0, 20.0}) {
                Complex const z(re, im);
                Complex const closed = big_f(nu, z);
                auto integrand = [nu, z](const QuadNode& n) {
                    double const th = kPi * std::min(n.dist_left, n.dist_right);
                    return std::pow(std::sin(th), 2.0 * nu + 2.0) * std::exp(z * n.x);
                };
                Complex const quad =
                    integrate_interval(integrand, 1e-14 * (1.0 + std::abs(closed)),
                                       IntegrandShape::endpoint_singular)
                        .value;
                max_a = std::max(max_a, std::abs(closed - quad) / std::abs(closed));
            }
        }
    }
    reports.push_back(make_residual_report(
        "appendix.norm_formula",
        ordered_json{{"nu_grid", {0.0, 0.5, 1.0, 2.5}}, {"z_points", 25}}, max_a, 1e-11));

    double max_b = 0.0;
    for (double nu : {0.0, 1.0}) {
        for (double x : {0.1, 0.25, 0.5}) {
            double const lg22 = log_gamma_real(2.0 * nu + 2.0);
            auto f = [nu, x, lg22](double k) {
                double const g2 =
                    2.0 * log_gamma_complex(Complex(nu + 1.0, k / (2.0 * kPi))).real();
                return Complex(
                    std::pow(4.0, nu) / (kPi * kPi) * std::exp(g2 - lg22 - 0.5 * k + k * x), 0.0);
            };
            double const target = std::pow(std::sin(kPi * x), -2.0 * nu - 2.0);
            double const val = integrate_line(f, 1e-10 * target, std::min(x, 1.0 - x)).value.real();
            max_b = std::max(max_b, std::abs(val - target) / target);
        }
    }
    reports.push_back(make_residual_report(
        "appendix.fourier_identity",
        ordered_json{{"nu_grid", {0.0, 1.0}}, {"x_grid", {0.1, 0.25, 0.5}}}, max_b, 1e-8));
    return reports;
}

int cmd_verify(const CommonOpts& o, const std::string& suite) {
    PTParams const p = o.params();
    std::mt19937_64 rng(o.seed);
    auto const t0 = std::chrono::steady_clock::now();

    std::vector<VerificationReport> reports;
    if (suite == "unity")
        reports = suite_unity(p, o.tol, rng);
    else if (suite == "susy")
        reports = suite_susy(p, o.tol, rng);
    else if (suite == "identities")
        reports = suite_identities(p, o.tol, rng);
    else if (suite == "symbols")
        reports = suite_symbols(p, o.tol);
    else if (suite == "appendix")
        reports = suite_appendix(p);
    else
        throw std::domain_error("verify: unknown suite '" + suite + "'");

    double const wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    ordered_json manifest;
    manifest["command"] = "verify";
    manifest["suite"] = suite;
    manifest["params"] = {{"nu", p.nu}, {"beta", p.beta}, {"L", p.L},
                          {"m", p.m},   {"hbar", p.hbar}, {"tol", o.tol}};
    manifest["seed"] = o.seed;
    ordered_json rep = ordered_json::array();
    bool all_pass = true;
    for (auto const& r : reports) {
        all_pass = all_pass && r.pass;
        rep.push_back(r.to_json());
    }
    manifest["reports"] = std::move(rep);
    write_output(o.out, manifest.dump(2) + "\n");
    std::fprintf(stderr, "verify %s: %zu reports, %s, wall_time %.2fs\n", suite.c_str(),
                 reports.size(), all_pass ? "all pass" : "FAILURES", wall);
    return all_pass ? 0 : 1;
}

// -------------------------------------------------------------------- cs ---

int cmd_cs(const CommonOpts& o, double q, double pmom, int grid) {
    if (grid < 1)
        throw std::domain_error("cs: grid must be >= 1");
    CoherentState const cs = coherent_state(o.nu, o.length, PhasePoint{q, pmom}, o.hbar);
    std::ostringstream csv;
    csv << "x,eta_re,eta_im,eta_abs2\n";
    for (int g = 1; g <= grid; ++g) {
        double const x = o.length * g / (grid + 1);
        Complex const v = evaluate(cs.body, x);
        csv << fmt17(x) << "," << fmt17(v.real()) << "," << fmt17(v.imag()) << ","
            << fmt17(std::norm(v)) << "\n";
    }
    write_output(o.out, csv.str());
    return 0;
}

// ----------------------------------------------------------------- limit ---

int cmd_limit(const CommonOpts& o, const std::string& lengths, double q, double pmom) {
    std::vector<double> ls;
    std::stringstream ss(lengths);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty())
            ls.push_back(std::stod(tok));
    if (ls.empty())
        throw std::domain_error("limit: empty length list");
    for (std::size_t i = 1; i < ls.size(); ++i)
        if (!(ls[i] > ls[i - 1]))
            throw std::domain_error("limit: length list must be strictly ascending");

    std::ostringstream csv;
    csv << "L,nu,q,p,fidelity\n";
    for (double L : ls) {
        LimitFidelity const f = limit_fidelity_report(o.nu, L, PhasePoint{q, pmom}, o.hbar);
        if (!f.precondition_ok)
            std::fprintf(stderr, "limit: |q| > L/10 at L=%g, fidelity degraded\n", L);
        csv << fmt17(L) << "," << fmt17(o.nu) << "," << fmt17(q) << "," << fmt17(pmom) << ","
            << fmt17(f.value) << "\n";
    }
    write_output(o.out, csv.str());
    return 0;
}

// --------------------------------------------------------------- symbols ---

int cmd_symbols(const CommonOpts& o, const std::string& which, int nq, int np, double p_max) {
    if (nq < 1 || np < 1)
        throw std::domain_error("symbols: grid sizes must be >= 1");
    PTParams const p = o.params();
    std::ostringstream csv;
    csv << "q,p,value_re,value_im\n";
    for (int iq = 1; iq <= nq; ++iq) {
        for (int ip = 0; ip < np; ++ip) {
            double const qq = p.L * iq / (nq + 1);
            double const pm = (np == 1) ? 0.0 : -p_max + 2.0 * p_max * ip / (np - 1);
            PhasePoint const pt{qq, pm};
            Complex v;
            if (which == "A")
                v = lowering_symbol_A(p, pt);
            else if (which == "H")
                v = Complex(lowering_symbol_H(p, pt), 0.0);
            else if (which == "invsin2")
                v = Complex(lowering_symbol_invsin2(p.nu, p.L, pt), 0.0);
            else if (which == "kinetic")
                v = Complex(lowering_symbol_kinetic(p, pt), 0.0);
            else
                throw std::domain_error("symbols: unknown symbol '" + which + "'");
            csv << fmt17(qq) << "," << fmt17(pm) << "," << fmt17(v.real()) << ","
                << fmt17(v.imag()) << "\n";
        }
    }
    write_output(o.out, csv.str());
    return 0;
}

// ---------------------------------------------------------------- matrix ---

int cmd_matrix(const CommonOpts& o, const std::string& symbol_name, int size) {
    if (size < 1 || size > 8)
        throw std::domain_error("matrix: size must be in [1, 8]");
    PTParams const p = o.params();
    PSymbol symbol;
    PTParams basis_params = p;
    if (symbol_name == "one") {
        symbol.terms = {{0, QProfile::constant, 1.0, 0.0}};
    } else if (symbol_name == "p") {
        symbol.terms = {{1, QProfile::constant, 1.0, 0.0}};
    } else if (symbol_name == "cot") {
        symbol.terms = {{0, QProfile::cot, 1.0, 0.0}};
    } else if (symbol_name == "invsin2") {
        symbol.terms = {{0, QProfile::inv_sin2, 1.0, 0.0}};
    } else if (symbol_name == "kinetic") {
        symbol.terms = {{2, QProfile::constant, 1.0 / (2.0 * p.m), 0.0}};
    } else if (symbol_name == "hamil1") {
        double const e0 = p.e0();
        double const np1sq = (p.nu + 1.0) * (p.nu + 1.0);
        symbol.terms = {{2, QProfile::constant, 1.0 / (2.0 * p.m), 0.0},
                        {0, QProfile::inv_sin2, e0 * np1sq, 0.0},
                        {0, QProfile::cot, -2.0 * e0 * p.beta, 0.0}};
        basis_params = partner_shift(p); // the identity pairs B_f with H_{nu+1,beta}
    } else {
        throw std::domain_error("matrix: unknown symbol '" + symbol_name + "'");
    }
    std::vector<SGPState> basis;
    for (int n = 0; n < size; ++n)
        basis.push_back(eigenstate(basis_params, n));
    auto const m = upper_symbol_matrix(p, symbol, basis, std::max(1e-10, o.tol * 1e-2));

    if (o.format == "json") {
        ordered_json j;
        j["symbol"] = symbol_name;
        j["params"] = {{"nu", p.nu}, {"beta", p.beta}, {"L", p.L}, {"m", p.m}, {"hbar", p.hbar}};
        ordered_json rows = ordered_json::array();
        for (auto const& row : m) {
            ordered_json r = ordered_json::array();
            for (Complex v : row)
                r.push_back({{"re", v.real()}, {"im", v.imag()}});
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
        write_output(o.out, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream csv;
    csv << "row,col,re,im\n";
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            csv << i << "," << j << "," << fmt17(m[i][j].real()) << "," << fmt17(m[i][j].imag())
                << "\n";
    write_output(o.out, csv.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poschl-Teller SUSYQM coherent states toolkit"};
    app.require_subcommand(1);

    CommonOpts o;
    int n_max = 5, grid = 0, cs_grid = 64, nq = 5, np = 5, size = 4;
    double q = 0.5, pmom = 0.0, q_limit = 0.0, p_limit = 0.0, p_max = 10.0;
    std::string suite, lengths, which = "H", symbol_name = "one";

    auto* eigen = app.add_subcommand("eigen", "eigenvalue and eigenfunction table");
    add_common(eigen, o);
    eigen->add_option("--n-max", n_max, "highest level");
    eigen->add_option("--grid", grid, "eigenfunction sample count (0: header only)");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify, o);
    verify->add_option("--suite", suite, "unity|susy|identities|symbols|appendix")->required();

    auto* cs = app.add_subcommand("cs", "coherent-state profile table");
    add_common(cs, o);
    cs->add_option("--q", q, "position label in (0, L)");
    cs->add_option("--p", pmom, "momentum label");
    cs->add_option("--grid", cs_grid, "sample count");

    auto* limit = app.add_subcommand("limit", "harmonic-limit fidelity sweep");
    add_common(limit, o);
    limit->add_option("--length-list", lengths, "ascending comma list of L values")->required();
    limit->add_option("--q", q_limit, "translated position label");
    limit->add_option("--p", p_limit, "momentum label");

    auto* symbols = app.add_subcommand("symbols", "lower-symbol grid export");
    add_common(symbols, o);
    symbols->add_option("--which", which, "A|H|invsin2|kinetic");
    symbols->add_option("--nq", nq, "q grid size");
    symbols->add_option("--np", np, "p grid size");
    symbols->add_option("--p-max", p_max, "momentum half-range");

    auto* matrix = app.add_subcommand("matrix", "quantized form in an eigenbasis");
    add_common(matrix, o);
    matrix->add_option("--symbol", symbol_name, "one|p|cot|invsin2|kinetic|hamil1");
    matrix->add_option("--size", size, "basis size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int const code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eigen->parsed())
            return cmd_eigen(o, n_max, grid);
        if (verify->parsed())
            return cmd_verify(o, suite);
        if (cs->parsed())
            return cmd_cs(o, q, pmom, cs_grid);
        if (limit->parsed())
            return cmd_limit(o, lengths, q_limit, p_limit);
        if (symbols->parsed())
            return cmd_symbols(o, which, nq, np, p_max);
        if (matrix->parsed())
            return cmd_matrix(o, symbol_name, size);
    } catch (const convergence_error& e) {
        std::fprintf(stderr, "non-convergence: %s\n", e.what());
        return 3;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "domain error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "invalid argument: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
