#include <doctest.h>

#include <cmath>

#include "ptcs/pt_model.hpp"
#include "ptcs/quadrature.hpp"
#include "ptcs/sgp_state.hpp"

using namespace ptcs;

namespace {
PTParams params(double nu, double beta) {
    PTParams p;
    p.nu = nu;
    p.beta = beta;
    return p;
}
} // namespace

TEST_SUITE("ptmodel") {

TEST_CASE("potential") {
    double const e0 = params(0, 0).e0();
    CHECK(e0 == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-15));
    CHECK(potential(params(1, 0), 0.5) == doctest::Approx(2.0 * e0).epsilon(1e-14));
    CHECK(potential(params(0, 0), 0.123) == 0.0);
    CHECK(potential(params(0, 1), 0.25) == doctest::Approx(-kPi * kPi).epsilon(1e-14));
    CHECK_THROWS_AS((void)potential(params(1, 0), -0.1), std::domain_error);
    CHECK_THROWS_AS((void)potential(params(1, 0), 1.0), std::domain_error);
}

TEST_CASE("potential reflection symmetry V_{nu,beta}(L-x) = V_{nu,-beta}(x)") {
    for (double x : {0.1, 0.33, 0.71, 0.9}) {
        double const lhs = potential(params(1.5, 0.8), 1.0 - x);
        double const rhs = potential(params(1.5, -0.8), x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
}

TEST_CASE("superpotential") {
    CHECK(superpotential(params(0, 0), 0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(superpotential(params(1, 2), 0.5) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(superpotential(params(0, 0), 0.25) == doctest::Approx(-kPi).epsilon(1e-14));
    // strictly increasing; zero where (nu+1) cot = beta/(nu+1)
    PTParams const p = params(0.5, 1.2);
    double prev = superpotential(p, 0.05);
    for (double x = 0.1; x < 1.0; x += 0.05) {
        double const w = superpotential(p, x);
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("energy and f_seq") {
    double const e0 = params(0, 0).e0();
    CHECK(energy(params(0, 0), 2).value == doctest::Approx(9.0 * e0).epsilon(1e-15));
    CHECK(energy(params(1, 2), 0).value == doctest::Approx(3.0 * e0).epsilon(1e-15));
    // recurrence E_n^{(nu,beta)} = E_0^{(nu+n,beta)} on the same arithmetic path
    for (double nu : {0.0, 0.3, 2.5}) {
        for (int n : {1, 2, 5}) {
            PTParams shifted = params(nu + n, 1.3);
            CHECK(energy(params(nu, 1.3), n).value == energy(shifted, 0).value);
        }
    }
    CHECK(f_seq(params(0, 0), 1) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(f_seq(params(2.2, 0.4), 0) == 0.0);
    CHECK(f_seq(params(0, 0), 2) == doctest::Approx(8.0).epsilon(1e-15));
    // E_n - E_0 = e0 f_n to a couple of ulps
    PTParams const p = params(1.7, 0.9);
    for (int n : {1, 3, 7})
        CHECK(energy(p, n).value - energy(p, 0).value ==
              doctest::Approx(p.e0() * f_seq(p, n)).epsilon(1e-15));
    // monotone in n
    for (int n = 0; n < 50; ++n)
        CHECK(energy(p, n + 1).value > energy(p, n).value);
}

TEST_CASE("ground state") {
    SGPState const well = ground_state(params(0, 0));
    for (double x : {0.2, 0.5, 0.77})
        CHECK(evaluate(well, x).real() ==
              doctest::Approx(std::sqrt(2.0) * std::sin(kPi * x)).epsilon(1e-13));

    // nu=1: quadrature oracle int sin^4 = 3/8 fixes c = sqrt(8/3)
    auto sin4 = integrate_interval(
        [](double x) {
            double const s = std::sin(kPi * x);
            return Complex(s * s * s * s, 0.0);
        },
        1e-13);
    CHECK(sin4.value.real() == doctest::Approx(3.0 / 8.0).epsilon(1e-13));
    SGPState const g1 = ground_state(params(1, 0));
    CHECK(g1.coeffs[0].real() ==
          doctest::Approx(1.0 / std::sqrt(sin4.value.real())).epsilon(1e-12));

    for (double nu : {0.0, 0.5, 2.5}) {
        for (double beta : {0.0, 1.3}) {
            SGPState const g = ground_state(params(nu, beta));
            CHECK(l2_norm(g) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(evaluate(g, 0.37).real() > 0.0);
        }
    }
}

TEST_CASE("ground state solves hbar phi' + W phi = 0") {
    for (double nu : {0.0, 1.0, 2.5}) {
        for (double beta : {0.0, 2.0}) {
            PTParams const p = params(nu, beta);
            SGPState const g = ground_state(p);
            SGPState const dg = differentiate(g);
            double scale = 0.0, worst = 0.0;
            for (int i = 1; i <= 200; ++i) {
                double const x = i / 201.0;
                double const resid =
                    std::abs(p.hbar * evaluate(dg, x) + superpotential(p, x) * evaluate(g, x));
                worst = std::max(worst, resid);
                scale = std::max(scale, std::abs(evaluate(dg, x)));
            }
            CHECK(worst <= 1e-10 * scale);
        }
    }
}

TEST_CASE("gegenbauer states") {
    SGPState const c0 = gegenbauer_state(0.0, 0, 1.0);
    SGPState const well = ground_state(params(0, 0));
    for (double x : {0.1, 0.5, 0.9})
        CHECK(std::abs(evaluate(c0, x) - evaluate(well, x)) < 1e-12);

    SGPState const c1 = gegenbauer_state(0.0, 1, 1.0);
    for (double x : {0.2, 0.6})
        CHECK(evaluate(c1, x).real() ==
              doctest::Approx(std::sqrt(2.0) * std::sin(2.0 * kPi * x)).epsilon(1e-12));

    SGPState const a = gegenbauer_state(1.0, 2, 1.0);
    CHECK(std::abs(inner_product(a, gegenbauer_state(1.0, 0, 1.0))) < 1e-10);
    CHECK(std::abs(inner_product(a, gegenbauer_state(1.0, 1, 1.0))) < 1e-10);
    CHECK(l2_norm(a) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)gegenbauer_state(1.0, 31, 1.0), std::invalid_argument);
}

TEST_CASE("parameter validation") {
    PTParams bad;
    bad.L = -1.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = PTParams{};
    bad.nu = -1.6;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_NOTHROW(params(0.0, -2.0).validate()); // reflected-beta construction allowed
}

} // TEST_SUITE
