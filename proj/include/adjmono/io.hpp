#pragma once

#include <string>
#include <vector>

#include "adjmono/ideal.hpp"

namespace adjmono {

/// A parsed ideal document: the declared variable names fix the ambient
/// dimension and coordinate order, the ideal itself is already minimalized.
struct IdealDocument {
  std::vector<std::string> variables;
  MonomialIdeal ideal;
};

/// Parses the JSON form {"variables": [names], "generators": [...]} where a
/// generator is either an exponent vector or a monomial string like "x^2*y"
/// (implicit exponent 1, omitted variables 0, "1" for the unit generator).
/// Throws std::invalid_argument on malformed documents, unknown variables,
/// negative exponents, or an empty generator list.
IdealDocument parse_ideal_document(const std::string& json_text);

/// Convenience wrapper returning only the ideal.
MonomialIdeal parse_ideal(const std::string& json_text);

/// A single monomial rendered with the declared variable names ("x^3*y", "1").
std::string monomial_string(const std::vector<std::string>& variables, const Exponent& e);

/// The document form of an ideal, as a JSON string that parse_ideal_document
/// accepts again. Byte-for-byte deterministic.
std::string ideal_to_json(const std::vector<std::string>& variables, const MonomialIdeal& ideal);

/// Human-readable form: "(x^5, x^4*y^2, ...)".
std::string ideal_to_text(const std::vector<std::string>& variables, const MonomialIdeal& ideal);

}  // namespace adjmono
