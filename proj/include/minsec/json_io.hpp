#pragma once

#include <string>

#include <json.hpp>

#include "minsec/partition.hpp"
#include "minsec/polynomial.hpp"

namespace minsec {

// Canonical JSON term list: descending lexicographic term order under the
// declared variable order, coefficients as exact rational strings.
inline nlohmann::json poly_to_json(const SparsePolynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json t;
        t["coeff"] = to_string(c);
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : m) mono.push_back({v.name(), e});
        t["monomial"] = mono;
        terms.push_back(t);
    }
    return terms;
}

// Sorted list of {diagram, convention, multiplicity} entries.
inline nlohmann::json table_to_json(const IsotypicTable& t) {
    nlohmann::json j;
    if (!t.ambient().empty()) j["ambient"] = t.ambient();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [p, m] : t.entries()) {
        nlohmann::json e;
        e["diagram"] = p.parts();
        e["convention"] = to_string(p.convention());
        e["multiplicity"] = m;
        rows.push_back(e);
    }
    j["entries"] = rows;
    return j;
}

}  // namespace minsec
