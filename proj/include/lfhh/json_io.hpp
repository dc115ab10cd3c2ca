#pragma once

// JSON shapes for reports and quadrature results (the wire formats the CLI
// emits and the test suites parse back).

#include "lfhh/applications.hpp"
#include "lfhh/inequalities.hpp"

#include <json.hpp>

namespace lfhh {

inline nlohmann::json to_json(const InequalityReport& r) {
    nlohmann::json sides = nlohmann::json::array();
    const Alpha alpha(r.alpha);
    for (const auto& s : r.sides)
        sides.push_back({{"label", s.label},
                         {"base", s.value.base},
                         {"real_power", real_power(s.value, alpha)}});
    nlohmann::json j{
        {"theorem", r.theorem},
        {"alpha", r.alpha},
        {"m", r.m},
        {"h", {{"kind", r.h_kind}, {"s", r.h_s}}},
        {"interval", {r.nu, r.mu}},
        {"sides", sides},
        {"margins", r.margins},
        {"verdict", to_string(r.verdict)},
        {"error_budget", r.error_budget},
        {"scheme", r.scheme},
        {"anchors", r.anchors},
    };
    if (r.q != 1.0) j["q"] = r.q;
    if (r.equality) j["equality"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline nlohmann::json to_json(const QuadratureResult& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells)
        cells.push_back(
            {{"a", c.a}, {"b", c.b}, {"tag", c.tag}, {"bound", c.bound}});
    return nlohmann::json{
        {"value", r.value.base},
        {"certified_bound", r.certified_bound.base},
        {"reference", r.reference.base},
        {"actual_error", r.actual_error.base},
        {"cells", cells},
        {"converged", r.converged},
    };
}

} // namespace lfhh
