#pragma once

#include "ptcs/pt_model.hpp"
#include "ptcs/report.hpp"
#include "ptcs/sgp_state.hpp"

namespace ptcs {

// Shape invariance: the SUSY partner of H_{nu,beta} is H_{nu+1,beta}.
PTParams partner_shift(const PTParams& p);

struct EigenstateResult {
    SGPState state;      // unit norm, leading lambda-coefficient positive
    double norm_drift;   // |quadrature norm - 1| before renormalization
};

// phi_n built by the raising chain
// A+_{nu} A+_{nu+1} ... A+_{nu+n-1} phi_0^{(nu+n)} / prod sqrt(2 m e0 f),
// then renormalized by quadrature (the drift is the chain health metric).
EigenstateResult eigenstate_with_drift(const PTParams& p, int n);
SGPState eigenstate(const PTParams& p, int n);

// || A phi_{n+1} - sqrt(2 m e0 f_{n+1}) phi_n^{(nu+1,beta)} ||, evaluated on
// the chain-consistent states (the public sign convention flips with each
// raising step, which would put a spurious minus into the relation).
VerificationReport check_intertwining(const PTParams& p, int n, double tol);

// || H st - (1/2m) A+ A st - E_0 st || / || st ||
VerificationReport check_factorization(const PTParams& p, const SGPState& st, double tol);

} // namespace ptcs
