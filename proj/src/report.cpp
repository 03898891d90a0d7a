#include "ptcs/report.hpp"

namespace ptcs {

nlohmann::ordered_json VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["inputs"] = inputs;
    j["lhs"] = {{"re", lhs.real()}, {"im", lhs.imag()}};
    j["rhs"] = {{"re", rhs.real()}, {"im", rhs.imag()}};
    j["residual"] = residual;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    if (!strategy.empty())
        j["strategy"] = strategy;
    if (!notes.empty())
        j["notes"] = notes;
    return j;
}

VerificationReport make_report(std::string identity, nlohmann::ordered_json inputs, Complex lhs,
                               Complex rhs, double tolerance, std::string strategy,
                               std::string notes) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.inputs = std::move(inputs);
    r.lhs = lhs;
    r.rhs = rhs;
    r.residual = std::abs(lhs - rhs);
    r.tolerance = tolerance;
    r.pass = r.residual <= tolerance;
    r.strategy = std::move(strategy);
    r.notes = std::move(notes);
    return r;
}

VerificationReport make_residual_report(std::string identity, nlohmann::ordered_json inputs,
                                        double residual, double tolerance, std::string strategy,
                                        std::string notes) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.inputs = std::move(inputs);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    r.strategy = std::move(strategy);
    r.notes = std::move(notes);
    return r;
}

} // namespace ptcs
