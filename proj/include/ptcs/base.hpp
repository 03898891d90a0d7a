#pragma once

#include <complex>
#include <stdexcept>

namespace ptcs {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Quadrature ran out of its node budget before meeting the tolerance.
class convergence_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Compensated (Kahan) accumulator; summation order is fixed by the caller.
class KahanSum {
  public:
    void add(double v) {
        double const y = v - c_;
        double const t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }
  private:
    double s_ = 0.0, c_ = 0.0;
};

class KahanSumC {
  public:
    void add(Complex v) { re_.add(v.real()); im_.add(v.imag()); }
    Complex value() const { return {re_.value(), im_.value()}; }
  private:
    KahanSum re_, im_;
};

// mantissa * exp(log_scale); keeps wildly scaled intermediates representable.
struct ScaledComplex {
    Complex mantissa{0.0, 0.0};
    double log_scale = 0.0;
    Complex value() const { return mantissa * std::exp(log_scale); }
};

} // namespace ptcs
