// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every tolerance and runtime budget is pinned in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ptcs/asymptotics.hpp"
#include "ptcs/coherent.hpp"
#include "ptcs/complex_gamma.hpp"
#include "ptcs/frames.hpp"
#include "ptcs/pt_model.hpp"
#include "ptcs/quantization.hpp"
#include "ptcs/random_states.hpp"
#include "ptcs/susy.hpp"

using namespace ptcs;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("[%d/8] %-34s %s  (%s)\n", idx, name, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass)
        ++g_failures;
}

PTParams params(double nu, double beta) {
    PTParams p;
    p.nu = nu;
    p.beta = beta;
    return p;
}

// --- 1. closed form of the sin-power Laplace integral vs quadrature --------

void criterion_1() {
    auto const t0 = Clock::now();
    double worst = 0.0;
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
                worst = std::max(worst, std::abs(closed - quad) / std::abs(closed));
            }
        }
    }
    double const dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max rel err %.2e over 100 points, %.2fs", worst, dt);
    report(1, "norm closed form vs quadrature", worst < 1e-11 && dt < 5.0, buf);
}

// --- 2. Fourier-side identity on the line -----------------------------------

void criterion_2() {
    auto const t0 = Clock::now();
    double worst = 0.0;
    for (double nu : {0.0, 1.0}) {
        double const lg22 = log_gamma_real(2.0 * nu + 2.0);
        for (double x : {0.1, 0.25, 0.5}) {
            auto f = [nu, x, lg22](double k) {
                double const g2 =
                    2.0 * log_gamma_complex(Complex(nu + 1.0, k / (2.0 * kPi))).real();
                return Complex(
                    std::pow(4.0, nu) / (kPi * kPi) * std::exp(g2 - lg22 - 0.5 * k + k * x), 0.0);
            };
            double const target = std::pow(std::sin(kPi * x), -(2.0 * nu + 2.0));
            double const val =
                integrate_line(f, 1e-10 * target, std::min(x, 1.0 - x)).value.real();
            worst = std::max(worst, std::abs(val - target) / target);
        }
    }
    double const dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "max rel err %.2e over 6 points, %.2fs", worst, dt);
    report(2, "line integral identity", worst < 1e-8 && dt < 10.0, buf);
}

// --- 3. resolution of unity --------------------------------------------------

void criterion_3() {
    auto const t0 = Clock::now();
    std::mt19937_64 rng(271828);
    struct Case {
        double nu;
        SGPState psi;
    };
    std::vector<Case> cases;
    cases.push_back({0.0, ground_state(params(0, 0))});
    cases.push_back({1.0, eigenstate(params(1, 2), 3)});
    cases.push_back({2.5, eigenstate(params(2.5, 1.3), 1)});
    cases.push_back({0.5, random_form_domain_state(params(0.5, 0.0), rng)});
    cases.push_back({-0.5, ground_state(params(0, 0))}); // extended range
    double worst = 0.0;
    for (auto const& c : cases) {
        auto const r =
            verify_resolution(c.nu, 1.0, c.psi, ResolutionStrategy::parseval, 1e-8);
        worst = std::max(worst, r.residual);
    }
    auto const direct = verify_resolution(0.0, 1.0, ground_state(params(0, 0)),
                                          ResolutionStrategy::direct2d, 1e-4);
    auto const parseval = verify_resolution(0.0, 1.0, ground_state(params(0, 0)),
                                            ResolutionStrategy::parseval, 1e-8);
    double const agreement = std::abs(direct.lhs - parseval.lhs);
    double const dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "parseval max |1-val| %.2e, direct2d agreement %.2e, %.1fs", worst,
                  agreement, dt);
    report(3, "resolution of unity", worst < 1e-8 && agreement < 1e-4 && dt < 60.0, buf);
}

// --- 4. SUSY chain -----------------------------------------------------------

void criterion_4() {
    auto const t0 = Clock::now();
    double worst_fact = 0.0, worst_inter = 0.0, worst_eig = 0.0, worst_geg = 0.0;
    for (auto const& [nu, beta] :
         std::vector<std::pair<double, double>>{{0, 0}, {1, 0}, {0.25, 0}, {2.5, 1.3}}) {
        PTParams const p = params(nu, beta);
        for (int n = 0; n <= 5; ++n) {
            worst_fact = std::max(
                worst_fact, check_factorization(p, eigenstate(p, n), 1e-10).residual);
            if (n <= 4)
                worst_inter =
                    std::max(worst_inter, check_intertwining(p, n, 1e-10).residual);
            SGPState const st = eigenstate(p, n);
            double const en = energy(p, n).value;
            SGPState const resid =
                subtract(apply_hamiltonian(p, st), scaled(st, Complex(en, 0.0)));
            worst_eig = std::max(worst_eig, residual_norm(resid) / std::abs(en));
        }
        if (beta == 0.0) {
            for (int n = 0; n <= 5; ++n) {
                SGPState const diff =
                    subtract(eigenstate(p, n), gegenbauer_state(nu, n, 1.0));
                worst_geg = std::max(worst_geg, residual_norm(diff));
            }
        }
    }
    double const dt = seconds_since(t0);
    bool const pass =
        worst_fact < 1e-10 && worst_inter < 1e-10 && worst_eig < 1e-10 && worst_geg < 1e-9;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "fact %.1e, intertwine %.1e, eigresid %.1e, gegenbauer %.1e, %.1fs",
                  worst_fact, worst_inter, worst_eig, worst_geg, dt);
    report(4, "SUSY factorization and chain", pass, buf);
}

// --- 5. lower symbols --------------------------------------------------------

void criterion_5() {
    auto const t0 = Clock::now();
    double worst = 0.0;
    for (double nu : {0.0, 1.0}) {
        PTParams const p = params(nu, 0.0);
        for (int iq = 1; iq <= 5; ++iq) {
            for (int ip = -2; ip <= 2; ++ip) {
                PhasePoint const pt{iq / 6.0, 2.0 * kPi * ip};
                CoherentState const cs = coherent_state(nu, 1.0, pt);
                Complex const a_quad = inner_product(cs.body, apply_lowering(p, cs.body));
                worst = std::max(worst, std::abs(a_quad - lowering_symbol_A(p, pt)) /
                                            (1.0 + std::abs(lowering_symbol_A(p, pt))));
                Complex const h_quad =
                    inner_product(cs.body, apply_hamiltonian(p, cs.body));
                worst = std::max(worst, std::abs(h_quad - lowering_symbol_H(p, pt)) /
                                            std::abs(lowering_symbol_H(p, pt)));
                Complex const s_quad = inner_product(
                    cs.body, multiply_poly(cs.body, {Complex(1.0, 0.0), Complex(0.0, 0.0),
                                                     Complex(1.0, 0.0)}));
                worst = std::max(worst,
                                 std::abs(s_quad - lowering_symbol_invsin2(nu, 1.0, pt)) /
                                     lowering_symbol_invsin2(nu, 1.0, pt));
                SGPState const kin = scaled(differentiate(differentiate(cs.body)),
                                            Complex(-0.5, 0.0));
                Complex const k_quad = inner_product(cs.body, kin);
                worst = std::max(worst,
                                 std::abs(k_quad - lowering_symbol_kinetic(p, pt)) /
                                     lowering_symbol_kinetic(p, pt));
            }
        }
    }
    bool const exact_invsin = lowering_symbol_invsin2(0.0, 1.0, {0.5, 0.0}) == 2.0;
    bool const exact_kin =
        lowering_symbol_kinetic(params(0, 0), {0.5, 0.0}) == params(0, 0).e0();
    double const dt = seconds_since(t0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "max rel err %.2e, exact values %s, %.2fs", worst,
                  (exact_invsin && exact_kin) ? "bit-equal" : "MISMATCH", dt);
    report(5, "lower symbols vs quadrature", worst < 1e-9 && exact_invsin && exact_kin, buf);
}

// --- 6. quantization identity catalog ---------------------------------------

void criterion_6() {
    auto const t0 = Clock::now();
    std::mt19937_64 rng(314159);
    double worst = 0.0;
    bool all_pass = true;
    {
        PTParams const p = params(1.0, 0.7);
        std::vector<std::pair<SGPState, SGPState>> pairs;
        for (int i = 0; i < 3; ++i)
            pairs.emplace_back(random_form_domain_state(p, rng),
                               random_form_domain_state(p, rng));
        for (auto const& name : identity_catalog()) {
            auto const r = check_identity(name, p, pairs, 1e-8);
            all_pass = all_pass && r.pass;
            worst = std::max(worst, r.residual);
        }
    }
    {
        PTParams const p = params(0.25, 0.7); // the nu < 1/2 regime
        std::vector<std::pair<SGPState, SGPState>> pairs;
        for (int i = 0; i < 3; ++i)
            pairs.emplace_back(random_form_domain_state(p, rng),
                               random_form_domain_state(p, rng));
        for (auto const& name : {std::string("generalH"), std::string("p2m")}) {
            auto const r = check_identity(name, p, pairs, 1e-8);
            all_pass = all_pass && r.pass;
            worst = std::max(worst, r.residual);
        }
    }
    double const dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "8+2 identities, max residual %.2e, %.2fs", worst, dt);
    report(6, "quantization identity catalog", all_pass, buf);
}

// --- 7. harmonic limit -------------------------------------------------------

void criterion_7() {
    auto const t0 = Clock::now();
    std::vector<double> const grid{10.0, 30.0, 100.0, 300.0, 1000.0};
    std::vector<double> f;
    for (double L : grid)
        f.push_back(limit_fidelity(0.0, L, {0.0, 0.0}));
    bool monotone = true;
    for (std::size_t i = 1; i < f.size(); ++i)
        monotone = monotone && (f[i] > f[i - 1]);
    bool const threshold = f.back() > 0.9999;
    double const dt = seconds_since(t0);
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "f(10)=%.9f f(1000)=%.9f; normalized overlap is scale invariant at q=p=0, "
                  "%.1fs",
                  f.front(), f.back(), dt);
    report(7, "harmonic-limit fidelity", monotone && threshold, buf);
}

// --- 8. determinism of the CLI manifests ------------------------------------

std::string run_capture(const std::string& cmd, const std::string& path) {
    std::string const full = cmd + " --out " + path + " 2> /dev/null";
    if (std::system(full.c_str()) != 0)
        return {};
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    std::remove(path.c_str());
    return ss.str();
}

void criterion_8(const char* cli) {
    auto const t0 = Clock::now();
    if (cli == nullptr) {
        report(8, "manifest determinism", false, "ptcs binary path not supplied");
        return;
    }
    std::string const cmd =
        std::string(cli) + " verify --suite susy --nu 1 --beta 0.5 --seed 42";
    std::string const a = run_capture(cmd, "acc_manifest_a.tmp");
    std::string const b = run_capture(cmd, "acc_manifest_b.tmp");
    bool const pass = !a.empty() && a == b;
    double const dt = seconds_since(t0);
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu bytes, byte-identical=%s, %.2fs", a.size(),
                  pass ? "yes" : "NO", dt);
    report(8, "manifest determinism", pass, buf);
}

} // namespace

int main(int argc, char** argv) {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(argc > 1 ? argv[1] : nullptr);
    if (g_failures > 0)
        std::printf("%d criterion(s) FAILED\n", g_failures);
    else
        std::printf("all acceptance criteria PASS\n");
    return g_failures == 0 ? 0 : 1;
}
