#ifndef ELLINT_MANIFEST_HPP
#define ELLINT_MANIFEST_HPP

#include <json.hpp>

#include "ellint/catalog.hpp"

// The shipped registry manifest: one JSON object per record with the
// plan identifiers and numeric parameters.  data/identities_manifest.json
// is this array verbatim; a test regenerates and compares it.

namespace ellint::catalog {

inline nlohmann::ordered_json manifest() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rec : registry()) {
        nlohmann::ordered_json j;
        j["id"] = rec.id;
        j["section"] = rec.section;
        j["lhs_plan"] = rec.lhs_plan;
        j["rhs_plan"] = rec.rhs_plan;
        j["lhs_top_op"] = rec.lhs_top_op;
        j["rhs_top_op"] = rec.rhs_top_op;
        j["tol"] = rec.tol;
        j["cost"] = cost_name(rec.cost);
        j["tags"] = rec.tags;
        j["grid"] = rec.grid;
        j["covers"] = rec.covers;
        arr.push_back(std::move(j));
    }
    return arr;
}

} // namespace ellint::catalog

#endif
