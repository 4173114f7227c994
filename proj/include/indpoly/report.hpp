#pragma once

#include "indpoly/identities.hpp"

#include <json.hpp>

#include <string>

namespace indpoly {

/// name(params): STATUS [detail], with both polynomials appended on a mismatch.
std::string render_text(const CheckReport &r);

/// {"name", "params", "status", "lhs", "rhs", "detail"}; coefficients as
/// decimal strings.
nlohmann::json to_json(const CheckReport &r);
CheckReport report_from_json(const nlohmann::json &j);

}  // namespace indpoly
