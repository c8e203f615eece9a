#ifndef LIECHECK_DOCUMENTS_HPP
#define LIECHECK_DOCUMENTS_HPP

#include <string>

#include <json.hpp>

#include "liecheck/lie_algebra.hpp"
#include "liecheck/representation.hpp"

namespace liecheck {

using Json = nlohmann::json;

/// Rationals are serialized as strings "p/q" (never floats); structure
/// constants as a sparse list {i, j, k, c} with 1-based indices, i < j;
/// matrices as row-major arrays of rational strings.

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const MatrixQ& m);
MatrixQ matrix_from_json(const Json& j);

Json algebra_to_json(const LieAlgebra& g);
LieAlgebra algebra_from_json(const Json& j);

Json representation_to_json(const Representation& rho);
Representation representation_from_json(const Json& j);

/// Typed documents: {"kind": ..., payload per kind}.
Json document_wrap(const std::string& kind, Json payload);

/// Parses the document text, checks the expected kind ("" accepts any),
/// and returns the parsed JSON.  Throws ParseError with a message.
Json parse_document(const std::string& text, const std::string& expected_kind = "");

/// Matrix payload of an "acs" / "two_form" / "metric" document.
MatrixQ matrix_document_payload(const Json& doc);

Json acs_document(const MatrixQ& j);
Json two_form_document(const MatrixQ& m);
Json metric_document(const MatrixQ& m);
Json algebra_document(const LieAlgebra& g);
Json representation_document(const Representation& rho);

} // namespace liecheck

#endif
