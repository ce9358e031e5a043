#pragma once

#include <string>
#include <vector>

#include "skewcc/gf.hpp"

namespace skewcc {

/// Parses the field-element grammar "c_k*w^k + ... + c_0" (the '*' is
/// optional, juxtaposition works: "2w+2").  Coefficients must lie in [0, p).
FieldElement parse_element(const std::string& text, const FieldSpecPtr& spec);

/// Parses a polynomial in x with field-element coefficients, e.g.
/// "(w^2+1)x^3+(w+1)x^2" or "2wx^2+2wx+w".  Returns the coefficient vector,
/// constant term first (empty for "0").
std::vector<FieldElement> parse_poly(const std::string& text, const FieldSpecPtr& spec);

std::string format_element(const FieldElement& e);
std::string format_poly(const std::vector<FieldElement>& coeffs);

}  // namespace skewcc
