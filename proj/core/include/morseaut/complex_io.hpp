#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "morseaut/complex.hpp"

namespace morseaut {

/// Facet text format: one facet per line, whitespace-separated vertex labels,
/// `#` starts a comment, blank lines are ignored. Errors carry the line number.
SimplicialComplex parse_facet_text(std::istream& in);
SimplicialComplex parse_facet_text(std::string_view text);

/// Writes one facet per line in canonical order.
std::string to_facet_text(const SimplicialComplex& complex);

/// JSON object with `vertices`, `facets` and `f_vector`.
std::string to_json(const SimplicialComplex& complex, int indent = 2);

/// Accepts the object written by to_json. `f_vector` is optional and, when
/// present, must match the closure of the facets.
SimplicialComplex parse_complex_json(std::string_view text);

/// Dispatches on the first non-blank character: `{` means JSON, anything else
/// the facet text format.
SimplicialComplex parse_complex(std::string_view text);

}  // namespace morseaut
