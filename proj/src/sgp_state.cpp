#include "ptcs/sgp_state.hpp"

#include <algorithm>
#include <cmath>

namespace ptcs {

int degree(const SGPState& st) { return static_cast<int>(st.coeffs.size()) - 1; }

bool is_zero(const SGPState& st) {
    for (Complex c : st.coeffs)
        if (c != Complex(0.0, 0.0))
            return false;
    return true;
}

namespace {
// operator outputs have exact degrees; only drop exact zeros, a magnitude
// cut would eat genuine top coefficients when gamma is large (windowed
// states carry rates up to the quadrature endpoint cutoff)
SGPState trim_zeros(SGPState st) {
    while (st.coeffs.size() > 1 && st.coeffs.back() == Complex(0.0, 0.0))
        st.coeffs.pop_back();
    return st;
}
} // namespace

SGPState trimmed(SGPState st) {
    double maxmag = 0.0;
    for (Complex c : st.coeffs)
        maxmag = std::max(maxmag, std::abs(c));
    double const cut = 1e-14 * maxmag;
    while (st.coeffs.size() > 1 && std::abs(st.coeffs.back()) <= cut)
        st.coeffs.pop_back();
    if (maxmag == 0.0)
        st.coeffs.assign(1, Complex(0.0, 0.0));
    return st;
}

SGPState scaled(const SGPState& st, Complex factor) {
    SGPState out = st;
    for (Complex& c : out.coeffs)
        c *= factor;
    return out;
}

namespace {
void require_compatible(const SGPState& a, const SGPState& b) {
    bool const ok = std::abs(a.s - b.s) <= 1e-12 * (1.0 + std::abs(a.s)) &&
                    std::abs(a.gamma - b.gamma) <= 1e-12 * (1.0 + std::abs(a.gamma)) &&
                    a.L == b.L;
    if (!ok)
        throw std::invalid_argument("SGPState: incompatible (s, gamma, L) in linear combination");
}
} // namespace

SGPState subtract(const SGPState& a, const SGPState& b) {
    require_compatible(a, b);
    SGPState out = a;
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), Complex(0.0, 0.0));
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
        out.coeffs[j] -= b.coeffs[j];
    return trimmed(std::move(out));
}

SGPState multiply_poly(const SGPState& st, const std::vector<Complex>& q) {
    SGPState out = st;
    std::vector<Complex> r(st.coeffs.size() + q.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < st.coeffs.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            r[i + j] += st.coeffs[i] * q[j];
    out.coeffs = std::move(r);
    return trim_zeros(std::move(out));
}

namespace {

// mixed form sum_j c_j cos^j(th) sin^{s-j}(th), evaluated as
// sin^{s-D} * sum_j c_j cos^j sin^{D-j} with one fractional power.
Complex mixed_form(const std::vector<Complex>& c, double s, double sin_th, double cos_th) {
    int const d = static_cast<int>(c.size()) - 1;
    Complex acc(0.0, 0.0);
    double cospow = 1.0;
    // sin^{D-j}: build descending powers iteratively
    std::vector<double> sinpow(d + 1);
    sinpow[d] = 1.0;
    for (int j = d - 1; j >= 0; --j)
        sinpow[j] = sinpow[j + 1] * sin_th;
    for (int j = 0; j <= d; ++j) {
        acc += c[j] * (cospow * sinpow[j]);
        cospow *= cos_th;
    }
    return acc * std::pow(sin_th, s - d);
}

void sin_cos_from_node(const QuadNode& node, double& sin_th, double& cos_th) {
    if (node.dist_left <= node.dist_right) {
        sin_th = std::sin(kPi * node.dist_left);
        cos_th = std::cos(kPi * node.dist_left);
    } else {
        sin_th = std::sin(kPi * node.dist_right);
        cos_th = -std::cos(kPi * node.dist_right);
    }
}

} // namespace

Complex evaluate_node(const SGPState& st, const QuadNode& node) {
    double sin_th, cos_th;
    sin_cos_from_node(node, sin_th, cos_th);
    return mixed_form(st.coeffs, st.s, sin_th, cos_th) * std::exp(st.gamma * (node.x * st.L));
}

Complex evaluate(const SGPState& st, double x) {
    if (!(x > 0.0) || !(x < st.L))
        throw std::domain_error("evaluate: x outside (0, L)");
    double const edge = std::min(x, st.L - x);
    if (st.s < degree(st) && edge < 1e-12 * st.L)
        throw std::overflow_error("evaluate: state diverges at the endpoints");
    QuadNode node{x / st.L, x / st.L, (st.L - x) / st.L};
    return evaluate_node(st, node);
}

SGPState differentiate(const SGPState& st) {
    int const d = degree(st);
    double const c0 = kPi / st.L;
    auto at = [&](int j) { return (j >= 0 && j <= d) ? st.coeffs[j] : Complex(0.0, 0.0); };
    SGPState out = st;
    out.coeffs.assign(d + 2, Complex(0.0, 0.0));
    for (int j = 0; j <= d + 1; ++j)
        out.coeffs[j] =
            st.gamma * at(j) + c0 * ((st.s - j + 1.0) * at(j - 1) - (j + 1.0) * at(j + 1));
    return trim_zeros(std::move(out));
}

SGPState apply_lowering(const PTParams& p, const SGPState& st) {
    int const d = degree(st);
    double const c0 = p.hbar * kPi / st.L;
    double const bfac = p.beta / (p.nu + 1.0);
    auto at = [&](int j) { return (j >= 0 && j <= d) ? st.coeffs[j] : Complex(0.0, 0.0); };
    SGPState out = st;
    out.coeffs.assign(d + 2, Complex(0.0, 0.0));
    for (int j = 0; j <= d + 1; ++j)
        out.coeffs[j] = p.hbar * st.gamma * at(j) +
                        c0 * ((st.s - j - p.nu) * at(j - 1) - (j + 1.0) * at(j + 1) +
                              bfac * at(j));
    return trim_zeros(std::move(out));
}

SGPState apply_raising(const PTParams& p, const SGPState& st) {
    int const d = degree(st);
    double const c0 = p.hbar * kPi / st.L;
    double const bfac = p.beta / (p.nu + 1.0);
    auto at = [&](int j) { return (j >= 0 && j <= d) ? st.coeffs[j] : Complex(0.0, 0.0); };
    SGPState out = st;
    out.coeffs.assign(d + 2, Complex(0.0, 0.0));
    for (int j = 0; j <= d + 1; ++j)
        out.coeffs[j] = -p.hbar * st.gamma * at(j) +
                        c0 * ((j - 2.0 - st.s - p.nu) * at(j - 1) + (j + 1.0) * at(j + 1) +
                              bfac * at(j));
    return trim_zeros(std::move(out));
}

SGPState apply_hamiltonian(const PTParams& p, const SGPState& st) {
    if (st.s < 1.0)
        throw std::invalid_argument("apply_hamiltonian: requires sin exponent >= 1");
    SGPState kin = differentiate(differentiate(st));
    double const kfac = -p.hbar * p.hbar / (2.0 * p.m);
    // V = e0 [nu(nu+1)(1+lambda^2) - 2 beta lambda]
    double const e0 = p.e0();
    std::vector<Complex> v{Complex(e0 * p.nu * (p.nu + 1.0), 0.0),
                           Complex(-2.0 * e0 * p.beta, 0.0),
                           Complex(e0 * p.nu * (p.nu + 1.0), 0.0)};
    SGPState pot = multiply_poly(st, v);
    SGPState out = st;
    out.coeffs.assign(std::max(kin.coeffs.size(), pot.coeffs.size()), Complex(0.0, 0.0));
    for (std::size_t j = 0; j < kin.coeffs.size(); ++j)
        out.coeffs[j] += kfac * kin.coeffs[j];
    for (std::size_t j = 0; j < pot.coeffs.size(); ++j)
        out.coeffs[j] += pot.coeffs[j];
    return trim_zeros(std::move(out));
}

ScaledComplex sgp_pair_scaled(const SGPState& a, const SGPState& b, double tol_value) {
    if (a.L != b.L)
        throw std::invalid_argument("sgp_pair_scaled: states on different intervals");
    if (is_zero(a) || is_zero(b))
        return ScaledComplex{Complex(0.0, 0.0), 0.0};

    double const s_tot = a.s + b.s;
    Complex const g = std::conj(a.gamma) + b.gamma;
    std::vector<Complex> c(a.coeffs.size() + b.coeffs.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            c[i + j] += std::conj(a.coeffs[i]) * b.coeffs[j];
    int const d = static_cast<int>(c.size()) - 1;
    if (s_tot - d <= -1.0 + 1e-12)
        throw std::domain_error("inner_product: minimal mixed sin exponent <= -1");

    double const L = a.L;
    Complex const gl = g * L; // exponent rate over t = x/L
    double const z = gl.real();
    double const shift = std::max(z, 0.0);
    // tol is absolute on the true value = mantissa * e^{shift}; the engine
    // sees the mantissa, so rescale (the engine has its own relative and
    // noise floors, a tiny target just means "as accurate as representable")
    double const tol = std::max(1e-290, tol_value * std::exp(-std::min(shift, 650.0)));

    // exponent relative to the shift, formed from the endpoint distance so
    // no large-magnitude cancellation enters the exp argument
    auto shifted_exp = [&](const QuadNode& node) {
        double const re = (z > 0.0) ? -z * node.dist_right : z * node.x;
        return std::exp(Complex(re, gl.imag() * node.x));
    };

    if (std::abs(z) <= 60.0) {
        auto f = [&](const QuadNode& node) {
            double sin_th, cos_th;
            sin_cos_from_node(node, sin_th, cos_th);
            return mixed_form(c, s_tot, sin_th, cos_th) * shifted_exp(node);
        };
        QuadratureResult r = integrate_interval(f, tol, IntegrandShape::endpoint_singular);
        return ScaledComplex{r.value * L, shift};
    }

    // |z| large: the exponential confines the integrand to one endpoint;
    // substitute u = |z| * (distance to that endpoint) and integrate the
    // e^{-u} profile on (0, U).
    double const az = std::abs(z);
    double const u_max = std::min(az, 60.0 + 4.0 * std::max(0.0, s_tot - d));
    bool const right = (z > 0.0);
    auto f = [&](const QuadNode& vnode) {
        double const u = u_max * vnode.x;
        double const dist = u / az; // distance to the confining endpoint in t units
        QuadNode tnode;
        if (right) {
            tnode.dist_right = dist;
            tnode.dist_left = 1.0 - dist;
        } else {
            tnode.dist_left = dist;
            tnode.dist_right = 1.0 - dist;
        }
        tnode.x = tnode.dist_left;
        double sin_th, cos_th;
        sin_cos_from_node(tnode, sin_th, cos_th);
        return mixed_form(c, s_tot, sin_th, cos_th) * shifted_exp(tnode);
    };
    QuadratureResult r = integrate_interval(f, tol, IntegrandShape::endpoint_singular);
    return ScaledComplex{r.value * L * (u_max / az), shift};
}

Complex inner_product(const SGPState& a, const SGPState& b, double tol) {
    return sgp_pair_scaled(a, b, tol).value();
}

double l2_norm(const SGPState& st, double tol) {
    return std::sqrt(std::max(0.0, inner_product(st, st, tol).real()));
}

SGPState normalized(const SGPState& st) {
    double const n = l2_norm(st);
    if (!(n > 0.0))
        throw std::invalid_argument("normalized: zero state");
    return scaled(st, Complex(1.0 / n, 0.0));
}

double residual_norm(const SGPState& st) {
    if (is_zero(st))
        return 0.0;
    auto abs2 = [&](const QuadNode& node) {
        Complex const v = evaluate_node(st, node);
        return Complex(std::norm(v), 0.0);
    };
    return fixed_grid_l2(abs2, st.L);
}

nlohmann::ordered_json to_json(const SGPState& st) {
    nlohmann::ordered_json j;
    j["s"] = st.s;
    j["gamma"] = {{"re", st.gamma.real()}, {"im", st.gamma.imag()}};
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (Complex c : st.coeffs)
        coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    j["coeffs"] = std::move(coeffs);
    j["L"] = st.L;
    return j;
}

SGPState sgp_from_json(const nlohmann::json& j) {
    SGPState st;
    st.s = j.at("s").get<double>();
    st.gamma = Complex(j.at("gamma").at("re").get<double>(), j.at("gamma").at("im").get<double>());
    st.coeffs.clear();
    for (auto const& c : j.at("coeffs"))
        st.coeffs.emplace_back(c.at("re").get<double>(), c.at("im").get<double>());
    if (st.coeffs.empty())
        st.coeffs.assign(1, Complex(0.0, 0.0));
    st.L = j.at("L").get<double>();
    return st;
}

} // namespace ptcs
