#include "ptcs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

namespace ptcs {

namespace {

// 16-point Gauss-Legendre rule on [-1,1], nodes ascending. Computed once by
// Newton iteration on P_16 (deterministic to the last bit).
struct GaussRule {
    double t[16];
    double w[16];
    GaussRule() {
        int const n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double const p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                double const dx = p0 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-16)
                    break;
            }
            t[i] = -x;
            t[n - 1 - i] = x;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
        }
    }
};

const GaussRule& gauss16() {
    static const GaussRule rule;
    return rule;
}

void check_finite(Complex v, double x) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::domain_error("quadrature: integrand non-finite at x = " + std::to_string(x));
}

// Convergence: absolute target, relative floor, and a rounding-noise floor
// set by the magnitude sum |f| w of the pass (scaled integrands can be far
// smaller than any fixed absolute cutoff).
bool quad_converged(double err, double tol, double value_mag, double noise_mag) {
    return err <= std::max({tol, 1e-14 * value_mag, 2e-16 * noise_mag});
}

// One composite Gauss pass with `panels` equal panels on (0,1).
Complex gauss_pass_unit(const NodeIntegrand& f, int panels, long long& evals,
                        double& magnitude) {
    const GaussRule& g = gauss16();
    double const width = 1.0 / panels;
    KahanSumC acc;
    double mag = 0.0;
    for (int i = 0; i < panels; ++i) {
        for (int j = 0; j < 16; ++j) {
            double const xi = 0.5 * (1.0 + g.t[j]);
            double const one_minus_xi = 0.5 * (1.0 - g.t[j]);
            QuadNode node;
            node.dist_left = (i + xi) * width;
            node.dist_right = ((panels - 1 - i) + one_minus_xi) * width;
            node.x = node.dist_left;
            Complex const v = f(node);
            check_finite(v, node.x);
            double const w = 0.5 * width * g.w[j];
            acc.add(v * w);
            mag += std::abs(v) * w;
            ++evals;
        }
    }
    magnitude = mag;
    return acc.value();
}

QuadratureResult integrate_gauss_unit(const NodeIntegrand& f, double tol) {
    QuadratureResult res;
    double mag = 0.0;
    Complex prev = gauss_pass_unit(f, 1, res.evaluations, mag);
    for (int panels = 2; panels <= 4096; panels *= 2) {
        Complex const cur = gauss_pass_unit(f, panels, res.evaluations, mag);
        double const err = std::abs(cur - prev);
        res.value = cur;
        res.error_estimate = err;
        if (quad_converged(err, tol, std::abs(cur), mag))
            return res;
        prev = cur;
    }
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "integrate_interval: Gauss refinement exhausted, error %.3e",
                  res.error_estimate);
    throw convergence_error(msg);
}

// tanh-sinh on (0,1). Nodes x(t) = (1+tanh((pi/2) sinh t))/2 at t = k*h;
// levels halve h and reuse earlier nodes. |t| is capped where the endpoint
// distance underflows.
constexpr double kTsTmax = 6.115;
constexpr int kTsMaxLevel = 9; // h down to 2^-9

struct TsNode {
    Complex fw; // f(x(t)) * x'(t)
};

QuadratureResult integrate_tanh_sinh_unit(const NodeIntegrand& f, double tol) {
    QuadratureResult res;
    // key: t / h_max in integer steps so coarser levels index a subset
    std::map<long long, TsNode> cache;
    long long const kmax_fine = 1LL << kTsMaxLevel; // index of t = 1.0 at finest h
    Complex prev{0.0, 0.0};
    bool have_prev = false;
    for (int level = 1; level <= kTsMaxLevel; ++level) {
        double const h = std::pow(0.5, level);
        long long const stride = kmax_fine >> level;
        long long const kmax = static_cast<long long>(std::floor(kTsTmax / h));
        for (long long k = -kmax; k <= kmax; ++k) {
            long long const key = k * stride;
            if (cache.count(key))
                continue;
            double const t = k * h;
            double const u = 0.5 * kPi * std::sinh(t);
            double const au = std::abs(u);
            double const q = std::exp(-2.0 * au);
            double const delta = q / (1.0 + q); // distance to the near endpoint
            if (delta == 0.0)
                continue;
            double const sech2 = 4.0 * q / ((1.0 + q) * (1.0 + q));
            double const xprime = 0.25 * kPi * std::cosh(t) * sech2;
            if (xprime == 0.0)
                continue;
            QuadNode node;
            if (t >= 0.0) {
                node.dist_right = delta;
                node.dist_left = 1.0 - delta;
            } else {
                node.dist_left = delta;
                node.dist_right = 1.0 - delta;
            }
            node.x = node.dist_left;
            Complex const v = f(node);
            check_finite(v, node.x);
            cache[key] = TsNode{v * xprime};
            ++res.evaluations;
        }
        // fixed ascending-t summation over the nodes of this level
        KahanSumC acc;
        double mag = 0.0;
        for (auto const& [key, nd] : cache) {
            if (key % stride == 0) {
                acc.add(nd.fw);
                mag += std::abs(nd.fw);
            }
        }
        Complex const cur = acc.value() * h;
        if (have_prev) {
            double const err = std::abs(cur - prev);
            res.value = cur;
            res.error_estimate = err;
            if (level >= 3 && quad_converged(err, tol, std::abs(cur), mag * h))
                return res;
        }
        prev = cur;
        have_prev = true;
    }
    char msg[128];
    std::snprintf(msg, sizeof(msg), "integrate_interval: tanh-sinh levels exhausted, error %.3e (value %.6e)",
                  res.error_estimate, std::abs(res.value));
    throw convergence_error(msg);
}

} // namespace

QuadratureResult integrate_interval(const NodeIntegrand& f, double tol, IntegrandShape shape) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_interval: tol must be positive");
    return shape == IntegrandShape::smooth ? integrate_gauss_unit(f, tol)
                                           : integrate_tanh_sinh_unit(f, tol);
}

QuadratureResult integrate_interval(const std::function<Complex(double)>& f, double tol,
                                    IntegrandShape shape) {
    return integrate_interval([&f](const QuadNode& n) { return f(n.x); }, tol, shape);
}

QuadratureResult integrate_line(const std::function<Complex(double)>& f, double tol,
                                double decay_rate) {
    if (!(tol > 0.0) || !(decay_rate > 0.0))
        throw std::invalid_argument("integrate_line: tol and decay_rate must be positive");
    double const r = decay_rate;
    double m = 0.0;
    for (double k : {0.0, 0.5 / r, 1.0 / r, 2.0 / r})
        m = std::max({m, std::abs(f(k)), std::abs(f(-k))});
    double k_cut = std::log(10.0 * std::max(m, 1.0) / (tol * r)) / r;
    k_cut = std::max(k_cut, 4.0 / r);

    double tail = (std::abs(f(k_cut)) + std::abs(f(-k_cut))) / r;
    if (tail > tol / 10.0) {
        k_cut *= 1.5;
        tail = (std::abs(f(k_cut)) + std::abs(f(-k_cut))) / r;
    }

    QuadratureResult res;
    res.tail_bound = tail;
    const GaussRule& g = gauss16();
    double mag = 0.0;
    auto pass = [&](int panels) {
        double const width = 2.0 * k_cut / panels;
        KahanSumC acc;
        mag = 0.0;
        for (int i = 0; i < panels; ++i) {
            double const a = -k_cut + i * width;
            for (int j = 0; j < 16; ++j) {
                double const x = a + width * 0.5 * (1.0 + g.t[j]);
                Complex const v = f(x);
                check_finite(v, x);
                double const w = 0.5 * width * g.w[j];
                acc.add(v * w);
                mag += std::abs(v) * w;
                ++res.evaluations;
            }
        }
        return acc.value();
    };
    int panels = std::max(16, static_cast<int>(std::ceil(2.0 * k_cut * r / 3.0)));
    Complex prev = pass(panels);
    for (int iter = 0; iter < 12; ++iter) {
        panels *= 2;
        Complex const cur = pass(panels);
        double const err = std::abs(cur - prev);
        res.value = cur;
        res.error_estimate = err + tail;
        if (quad_converged(err, tol, std::abs(cur), mag))
            return res;
        prev = cur;
        if (res.evaluations > (1LL << 21))
            break;
    }
    char msg[128];
    std::snprintf(msg, sizeof(msg), "integrate_line: refinement exhausted, error %.3e",
                  res.error_estimate);
    throw convergence_error(msg);
}

double fixed_grid_l2(const NodeIntegrand& g_abs2, double scale) {
    const GaussRule& g = gauss16();
    int const panels = 32;
    double const width = 1.0 / panels;
    KahanSum acc;
    for (int i = 0; i < panels; ++i) {
        for (int j = 0; j < 16; ++j) {
            double const xi = 0.5 * (1.0 + g.t[j]);
            QuadNode node;
            node.dist_left = (i + xi) * width;
            node.dist_right = ((panels - 1 - i) + 0.5 * (1.0 - g.t[j])) * width;
            node.x = node.dist_left;
            acc.add(std::abs(g_abs2(node)) * (0.5 * width * g.w[j]));
        }
    }
    return std::sqrt(acc.value() * scale);
}

} // namespace ptcs
