#pragma once

#include <string>
#include <string_view>

#include "qmalg/algebra.hpp"

namespace qmalg {

/// Builds the algebra described by a JSON document without running the
/// axiom checks. Throws ParseError (syntax errors carry line and column,
/// semantic ones a JSON pointer) or StructuralError.
ConcreteAlgebra parse_algebra_unchecked(std::string_view text);

/// parse_algebra_unchecked followed by validate_algebra; violations are
/// thrown as ValidationError, with product entries located by JSON pointer.
ConcreteAlgebra parse_algebra(std::string_view text);

/// Validation report of a document whose structure is sound.
ValidationReport validate_document(std::string_view text);

/// Reads `path`, or `path` + ".json" when `path` does not exist.
std::string read_algebra_file(const std::string& path);
ConcreteAlgebra load_algebra(const std::string& path);

/// Canonical document: sorted keys, basis order preserved, products sorted
/// by argument index tuple, coefficients reduced, zeros omitted.
std::string serialize(const ConcreteAlgebra& alg);

}  // namespace qmalg
