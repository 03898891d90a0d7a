#pragma once

#include <random>

#include "ptcs/pt_model.hpp"
#include "ptcs/sgp_state.hpp"

namespace ptcs {

// Seeded test states. A state with lambda-degree d behaves like x^{s-d} at
// the endpoints, so the sin exponent is tied to the drawn degree to keep the
// endpoint order fixed.

// Smooth surrogate for the Hamiltonian form domain: endpoint order nu+2,
// i.e. s = nu + 2 + degree. Unit norm.
SGPState random_form_domain_state(const PTParams& params, std::mt19937_64& rng,
                                  int max_degree = 3);

// Generic state with endpoint order >= order_min (s = order_min + degree + u,
// u uniform in [0,1)). Unit norm.
SGPState random_sgp_state(double order_min, double L, std::mt19937_64& rng, int max_degree = 3);

} // namespace ptcs
