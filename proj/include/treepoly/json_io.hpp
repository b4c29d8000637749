#pragma once

// JSON forms: a polynomial is an array of {"tree", "coeff"} objects, a
// tensor polynomial an array of {"left", "right", "coeff"}, and an identity
// report {"identity", "cap", "checked", "violations"}.

#include "treepoly/poly_text.hpp"
#include "treepoly/series.hpp"

#include <json.hpp>

namespace treepoly {

inline nlohmann::json toJson(const TreePolynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [t, c] : f.terms())
        out.push_back({{"tree", renderTree(t)}, {"coeff", formatRationalFunction(c)}});
    return out;
}

inline nlohmann::json toJson(const TensorPolynomial& f) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, c] : f.terms())
        out.push_back({{"left", renderTree(k.first)},
                       {"right", renderTree(k.second)},
                       {"coeff", formatRationalFunction(c)}});
    return out;
}

inline nlohmann::json toJson(const IdentityReport& report) {
    nlohmann::json violations = nlohmann::json::array();
    for (const Violation& v : report.violations)
        violations.push_back({{"where", v.where}, {"lhs", v.lhs}, {"rhs", v.rhs}});
    return {{"identity", report.identity},
            {"cap", report.cap},
            {"checked", report.checked},
            {"violations", violations}};
}

inline TreePolynomial treePolynomialFromJson(const nlohmann::json& j) {
    TreePolynomial out;
    for (const auto& term : j)
        out.add(parseTree(term.at("tree").get<std::string>()),
                parseRationalFunction(term.at("coeff").get<std::string>()));
    return out;
}

} // namespace treepoly
