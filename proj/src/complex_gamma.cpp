#include "ptcs/complex_gamma.hpp"

#include <cmath>

namespace ptcs {

namespace {

// Lanczos coefficients for g = 607/128 (as in NR3's gammln).
constexpr double kLanczosC0 = 0.999999999999997092;
constexpr double kLanczosCof[14] = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    0.339946499848118887e-4,  0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,
    -0.210264441724104883e-3, 0.217439618115212643e-3,
    -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005;

// Valid for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
    Complex tmp = z + 5.24218750000000000; // z + g + 1/2
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczosC0;
    Complex y = z;
    for (double c : kLanczosCof) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrtTwoPi * ser / z);
}

// log sin(pi z) for Im z >= 0, branch chosen so that the reflection formula
// below stays continuous across Re z (Kolbig's prescription). For large Im z
// the direct sin would overflow, so use the asymptotic form.
Complex log_sin_pi(Complex z) {
    if (z.imag() > 110.0)
        return Complex(0.0, -kPi) * z + Complex(std::log(0.5), kPi / 2);
    double const n = std::floor(z.real());
    Complex const eps = z - n;
    return std::log(std::sin(kPi * eps)) - Complex(0.0, kPi * n);
}

} // namespace

Complex log_gamma_complex(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::domain_error("log_gamma_complex: non-finite argument");
    if (std::abs(z.imag()) < 1e-12) {
        double const r = std::round(z.real());
        if (r <= 0.0 && std::abs(z.real() - r) < 1e-12)
            throw std::domain_error("log_gamma_complex: argument at or near a pole");
    }
    if (z.real() >= 0.5)
        return lanczos_log_gamma(z);
    if (z.imag() >= 0.0) {
        // log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
        return std::log(kPi) - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
    }
    return std::conj(log_gamma_complex(std::conj(z)));
}

double log_gamma_real(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma_real: requires x > 0");
    return lanczos_log_gamma(Complex(x, 0.0)).real();
}

} // namespace ptcs
