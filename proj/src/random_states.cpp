#include "ptcs/random_states.hpp"

namespace ptcs {

namespace {
SGPState draw(double order, double L, std::mt19937_64& rng, int max_degree, bool complex_gamma) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    int const d = deg_dist(rng);
    SGPState st;
    st.s = order + d;
    st.L = L;
    double const re = unit(rng) / L;
    double const im = complex_gamma ? 2.0 * unit(rng) / L : 0.0;
    st.gamma = Complex(re, im);
    st.coeffs.assign(d + 1, Complex(0.0, 0.0));
    for (int j = 0; j <= d; ++j)
        st.coeffs[j] = Complex(unit(rng), unit(rng));
    if (std::abs(st.coeffs[d]) < 0.1)
        st.coeffs[d] += Complex(0.5, 0.0);
    return normalized(trimmed(std::move(st)));
}
} // namespace

SGPState random_form_domain_state(const PTParams& params, std::mt19937_64& rng, int max_degree) {
    return draw(params.nu + 2.0, params.L, rng, max_degree, true);
}

SGPState random_sgp_state(double order_min, double L, std::mt19937_64& rng, int max_degree) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double const order = order_min + u01(rng);
    return draw(order, L, rng, max_degree, true);
}

} // namespace ptcs
