#include "ptcs/frames.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "ptcs/complex_gamma.hpp"
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

SGPState windowed(const SGPState& st, double nu, double rate) {
    SGPState out = st;
    out.s += nu + 1.0;
    out.gamma += Complex(rate, 0.0);
    return out;
}

} // namespace

Complex phase_space_form(double nu, double L, double hbar,
                         const std::function<double(const QuadNode&)>& weight, int k,
                         const SGPState& phi, const SGPState& psi, double tol) {
    if (!(nu > -1.0))
        throw std::invalid_argument("phase_space_form: requires nu > -1");
    if (k < 0 || k > 4)
        throw std::invalid_argument("phase_space_form: p-degree out of range");
    if (phi.L != L || psi.L != L)
        throw std::invalid_argument("phase_space_form: states on a different interval");
    // integrability at any q: the windowed bracket must stay above the
    // sin-exponent floor
    double const s_tot = phi.s + psi.s + 2.0 * (nu + 1.0);
    int const d_tot = degree(phi) + degree(psi) + k;
    if (s_tot - d_tot <= -1.0 + 1e-9)
        throw std::domain_error("phase_space_form: non-integrable windowed bracket");

    Complex const deriv_factor = std::pow(Complex(0.0, -hbar), k);
    double const inner_tol = std::max(1e-14, 1e-3 * tol);

    auto q_integrand = [&](const QuadNode& qnode) -> Complex {
        // contributions fall off at least like the endpoint distance squared;
        // below the cutoff they are < 1e-60 of the total and the cot would
        // start to lose the log-domain bookkeeping
        if (std::min(qnode.dist_left, qnode.dist_right) < 1e-40)
            return Complex(0.0, 0.0);
        double const ct = stable_cot(qnode);
        double const rate = -(kPi / L) * (nu + 1.0) * ct; // W_{nu,0}(q)/hbar
        double const z = 2.0 * rate * L;
        double const w_q = weight(qnode);
        // the bracket's true-value error gets multiplied by |w_q| N^2 e^{shift}
        // = |w_q| e^{-ln L - shifted log F}; demand accordingly
        double const log_amp = -std::log(L) - log_big_f_shifted(nu, z);
        double const amp = std::abs(w_q) * std::exp(std::min(log_amp, 700.0)) * hbar;
        double const tol_local = std::max(1e-290, inner_tol / std::max(1.0, amp));
        SGPState const fa = windowed(phi, nu, rate);
        SGPState fb = windowed(psi, nu, rate);
        for (int i = 0; i < k; ++i)
            fb = differentiate(fb);
        ScaledComplex const br = sgp_pair_scaled(fa, fb, tol_local);
        double const expo = (br.log_scale - std::max(z, 0.0)) - std::log(L) -
                            log_big_f_shifted(nu, z);
        // combine magnitudes in log space: the mantissa can underflow while
        // expo alone would overflow, though their product is tiny
        double const am = std::abs(br.mantissa);
        if (am == 0.0)
            return Complex(0.0, 0.0);
        return w_q * deriv_factor * (br.mantissa / am) * std::exp(std::log(am) + expo);
    };
    QuadratureResult const r =
        integrate_interval(q_integrand, tol, IntegrandShape::endpoint_singular);
    return r.value * L;
}

namespace {

VerificationReport resolution_parseval(double nu, double L, const SGPState& psi, double tol,
                                       double hbar) {
    auto one = [](const QuadNode&) { return 1.0; };
    Complex const val = phase_space_form(nu, L, hbar, one, 0, psi, psi, 0.1 * tol);
    nlohmann::ordered_json inputs{{"nu", nu}, {"L", L}, {"hbar", hbar},
                                  {"state", {{"s", psi.s}, {"degree", degree(psi)}}}};
    return make_report("frames.resolution_of_unity", std::move(inputs), val, Complex(1.0, 0.0),
                       tol, "parseval");
}

VerificationReport resolution_direct2d(double nu, double L, const SGPState& psi, double tol,
                                       double hbar) {
    auto one = [](const QuadNode&) { return 1.0; };
    // second-moment tail bound: integral_{|p|>P} <= M2 / P^2 with
    // M2 = integral dq N^2 ||f_q'||^2 hbar^2 (the windowed states have
    // compactly supported f_q, so the Fourier tails are only polynomial and
    // higher q-integrated moments diverge at the walls)
    double const m2 = std::abs(phase_space_form(nu, L, hbar, one, 2, psi, psi, 1e-8).real());
    double const p_max = std::max(std::sqrt(10.0 * m2 / tol), 8.0 * kPi * hbar / L);
    double const tail_bound = m2 / (p_max * p_max);
    // dp below pi hbar / L makes the trapezoid alias terms vanish exactly
    // (the autocorrelation of f_q is supported on |tau| <= 2L)
    double const dp = kPi * hbar / (2.0 * L);
    int const jmax = static_cast<int>(std::ceil(p_max / dp));
    // resolve the fastest e^{-ipx/hbar} oscillation with >= 8 nodes/cycle
    int const osc_panels = static_cast<int>(std::ceil(p_max * L / (kPi * hbar)));

    auto run = [&](int refine) {
        double const dp_r = dp / refine;
        int const jmax_r = jmax * refine;
        auto q_integrand = [&](const QuadNode& qnode) -> Complex {
            if (std::min(qnode.dist_left, qnode.dist_right) < 1e-40)
                return Complex(0.0, 0.0);
            double const ct = stable_cot(qnode);
            double const rate = -(kPi / L) * (nu + 1.0) * ct;
            double const z = 2.0 * rate * L;

            int const panels =
                std::max({48, std::min(384, static_cast<int>(std::abs(z) / 4.0)),
                          osc_panels}) * refine;
            int const nx = panels * 4;
            // composite midpoint-free Gauss-4 grid for the windowed state
            static const double gt[4] = {-0.8611363115940526, -0.3399810435848563,
                                         0.3399810435848563, 0.8611363115940526};
            static const double gw[4] = {0.3478548451374538, 0.6521451548625461,
                                         0.6521451548625461, 0.3478548451374538};
            std::vector<Complex> v(nx);
            std::vector<Complex> rot(nx), cur(nx);
            double const width = 1.0 / panels;
            int idx = 0;
            for (int i = 0; i < panels; ++i) {
                for (int j = 0; j < 4; ++j, ++idx) {
                    double const xi = 0.5 * (1.0 + gt[j]);
                    QuadNode xn;
                    xn.dist_left = (i + xi) * width;
                    xn.dist_right = ((panels - 1 - i) + 0.5 * (1.0 - gt[j])) * width;
                    xn.x = xn.dist_left;
                    double sin_th =
                        std::sin(kPi * std::min(xn.dist_left, xn.dist_right));
                    Complex const psival = evaluate_node(psi, xn);
                    double const shifted_rate = (z > 0.0) ? -0.5 * z * xn.dist_right
                                                          : 0.5 * z * xn.x;
                    v[idx] = (0.5 * width * gw[j] * L) * psival *
                             std::pow(sin_th, nu + 1.0) * std::exp(shifted_rate);
                    double const ang = -dp_r * L * xn.x / hbar;
                    rot[idx] = Complex(std::cos(ang), std::sin(ang));
                    double const ang0 = -ang * jmax_r;
                    cur[idx] = Complex(std::cos(ang0), std::sin(ang0));
                }
            }
            KahanSum acc;
            for (int j = -jmax_r; j <= jmax_r; ++j) {
                KahanSumC fsum;
                for (int i = 0; i < nx; ++i)
                    fsum.add(v[i] * cur[i]);
                double const wp = (j == -jmax_r || j == jmax_r) ? 0.5 * dp_r : dp_r;
                acc.add(std::norm(fsum.value()) * wp);
                for (int i = 0; i < nx; ++i)
                    cur[i] *= rot[i];
            }
            double const expo = -std::log(L) - log_big_f_shifted(nu, z);
            double const av = acc.value();
            if (av <= 0.0)
                return Complex(0.0, 0.0);
            return Complex(std::exp(std::log(av) + expo) / (2.0 * kPi * hbar), 0.0);
        };
        return integrate_interval(q_integrand, tol, IntegrandShape::endpoint_singular).value * L;
    };

    Complex const coarse = run(1);
    Complex const fine = run(2);
    char notes[160];
    std::snprintf(notes, sizeof(notes),
                  "P_max=%.6g; tail_bound=%.3g; refinement delta=%.3g", p_max, tail_bound,
                  std::abs(fine - coarse));
    nlohmann::ordered_json inputs{{"nu", nu}, {"L", L}, {"hbar", hbar},
                                  {"state", {{"s", psi.s}, {"degree", degree(psi)}}}};
    return make_report("frames.resolution_of_unity", std::move(inputs), fine, Complex(1.0, 0.0),
                       tol, "direct2d", notes);
}

} // namespace

VerificationReport verify_resolution(double nu, double L, const SGPState& psi,
                                     ResolutionStrategy strategy, double tol, double hbar) {
    if (!(nu > -1.0))
        throw std::invalid_argument("verify_resolution: requires nu > -1 (extended range)");
    return strategy == ResolutionStrategy::parseval
               ? resolution_parseval(nu, L, psi, tol, hbar)
               : resolution_direct2d(nu, L, psi, tol, hbar);
}

Complex frame_function(double nu, const PTParams& params, int n, PhasePoint point, double hbar) {
    CoherentState const cs = coherent_state(nu, params.L, point, hbar);
    return inner_product(cs.body, eigenstate(params, n));
}

VerificationReport kernel_reproducing_check(double nu, double L,
                                            const std::vector<PhasePoint>& sample_points,
                                            double tol, double hbar) {
    if (sample_points.size() < 2)
        throw std::invalid_argument("kernel_reproducing_check: need at least 2 points");
    auto one = [](const QuadNode&) { return 1.0; };
    double max_resid = 0.0;
    for (PhasePoint const& a : sample_points) {
        for (PhasePoint const& c : sample_points) {
            CoherentState const ca = coherent_state(nu, L, a, hbar);
            CoherentState const cc = coherent_state(nu, L, c, hbar);
            Complex const closed = overlap(ca, cc);
            Complex const reproduced =
                phase_space_form(nu, L, hbar, one, 0, ca.body, cc.body, 0.05 * tol);
            max_resid = std::max(max_resid, std::abs(closed - reproduced));
        }
    }
    nlohmann::ordered_json inputs{{"nu", nu}, {"L", L}, {"hbar", hbar},
                                  {"points", sample_points.size()}};
    return make_residual_report("frames.reproducing_kernel", std::move(inputs), max_resid, tol,
                                "parseval-reduced");
}

} // namespace ptcs
