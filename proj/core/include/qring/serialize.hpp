#pragma once

#include <string>

#include "qring/presentation.hpp"

namespace qring {

// JSON round-trip for presentations. The schema is documented in the project
// README; coefficients travel as exact "num" / "num/den" strings. Parsing
// reconstructs through AlgebraPresentation::create, so deserialized data is
// re-validated (rule shape, overlap self-check) on the way in. Malformed
// input raises ParseError; semantically invalid presentations raise
// PresentationError.
std::string presentation_to_json(const PresentationPtr& p, int indent = -1);
PresentationPtr presentation_from_json(const std::string& text);

}  // namespace qring
