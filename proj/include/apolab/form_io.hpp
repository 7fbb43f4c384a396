#pragma once

#include "apolab/field.hpp"
#include "apolab/inverse_system.hpp"
#include "apolab/multipoly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace apolab {

// Form documents are JSON objects. A single form:
//
//   {"num_vars": 2, "degree": 3, "prime": 2147483647,
//    "terms": [{"exp": [2, 1], "coeff": 1}]}
//
// A presentation replaces "terms" with a list of generators:
//
//   {"num_vars": 2, "degree": 3, "prime": 2147483647,
//    "generators": [{"terms": [...]}, {"terms": [...]}]}
//
// Parsing is strict: unknown or repeated keys, exponent vectors of the wrong
// length or degree, repeated exponent vectors and coefficients outside
// [0, prime) are all rejected. Zero coefficients are accepted and dropped.

struct PresentationDocument {
    u64 prime = kDefaultPrime;
    LevelPresentation presentation;
};

nlohmann::ordered_json form_to_json(const Form& form, u64 prime);
nlohmann::ordered_json presentation_to_json(const LevelPresentation& p, u64 prime);

/// Accepts either document shape; a single form becomes a one-generator
/// presentation. Throws Error(ParseError) with a line/column for syntax
/// errors and a JSON path for schema errors.
PresentationDocument parse_presentation(std::string_view text);
PresentationDocument read_presentation_file(const std::string& path);

} // namespace apolab
