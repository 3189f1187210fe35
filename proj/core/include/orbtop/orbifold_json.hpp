#pragma once

#include <string>

#include "orbtop/seifert.hpp"

namespace orbtop {

/// Versioned JSON schema ("schema": 1) for an orbifold model plus Seifert
/// bundle inputs. Rationals are "p/q" strings, large integers decimal
/// strings; serialization is deterministic with stable key order.
std::string orbifold_to_json_text(const SeifertBundle& bundle);

/// Parses and fully validates; throws ParseError for malformed JSON,
/// SchemaError for a missing or ill-typed field (naming the field), and
/// InvariantViolation for structurally invalid models.
SeifertBundle parse_orbifold(const std::string& text);

SeifertBundle load_orbifold(const std::string& path);
void save_orbifold(const SeifertBundle& bundle, const std::string& path);

}  // namespace orbtop
