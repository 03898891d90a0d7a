#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptcs/frames.hpp"

namespace ptcs {

// Classical observables f(q,p) = sum_k g_k(q) p^k with k <= 2 and g_k drawn
// from a fixed catalog. This class is exactly what the Plancherel p-reduction
// of B_f needs; nothing outside it is accepted.
enum class QProfile { constant, cot, inv_sin2, superpotential, superpotential_sq };

struct PSymbolTerm {
    int p_degree = 0;             // 0, 1 or 2
    QProfile profile = QProfile::constant;
    double coefficient = 1.0;
    double profile_beta = 0.0;    // used by the W profiles only
};

struct PSymbol {
    std::vector<PSymbolTerm> terms;
};

// Names of the identity catalog; each maps to one quantized-form equation.
std::vector<std::string> identity_catalog();

// B_f(phi, psi) = integral f(q,p) <phi,eta_{q,p}><eta_{q,p},psi> dq dp/(2 pi hbar),
// p-moments reduced exactly (see phase_space_form). The coherent-state level
// is params.nu; W profiles use params with the term's profile_beta.
Complex quadratic_form(const PTParams& params, const PSymbol& symbol, const SGPState& phi,
                       const SGPState& psi, double tol = 1e-10);

// Compares B_f against the direct operator matrix element for one catalog
// identity on the given test pairs; reports the maximum relative residual.
VerificationReport check_identity(const std::string& name, const PTParams& params,
                                  const std::vector<std::pair<SGPState, SGPState>>& pairs,
                                  double tol);

// Matrix of B_f in the given (orthonormal) basis.
std::vector<std::vector<Complex>> upper_symbol_matrix(const PTParams& params,
                                                      const PSymbol& symbol,
                                                      const std::vector<SGPState>& basis,
                                                      double tol = 1e-10);

} // namespace ptcs
