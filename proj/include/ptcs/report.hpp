#pragma once

#include <string>

#include <json.hpp>

#include "ptcs/base.hpp"

namespace ptcs {

// Outcome of one identity check. residual is |lhs - rhs| or the stated norm;
// pass <=> residual <= tolerance. `strategy` and `notes` are optional
// (truncation bounds, reading conventions) and serialize only when set.
struct VerificationReport {
    std::string identity;
    nlohmann::ordered_json inputs; // parameter echo
    Complex lhs{0.0, 0.0};
    Complex rhs{0.0, 0.0};
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string strategy;
    std::string notes;

    nlohmann::ordered_json to_json() const;
};

VerificationReport make_report(std::string identity, nlohmann::ordered_json inputs, Complex lhs,
                               Complex rhs, double tolerance, std::string strategy = {},
                               std::string notes = {});

// Variant for norm-based residuals where lhs/rhs are not single numbers.
VerificationReport make_residual_report(std::string identity, nlohmann::ordered_json inputs,
                                        double residual, double tolerance,
                                        std::string strategy = {}, std::string notes = {});

} // namespace ptcs
