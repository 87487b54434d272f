#pragma once

#include <string>
#include <string_view>

#include "toric/chow.hpp"

namespace toric::cli {

/// Renders a class as "1 + 2*x1 + 7*x2 + 4*x1*x2": ascending degree, then
/// descending grlex, powers as x1^2, rational coefficients as p/q. The zero
/// class renders as "0".
std::string render_polynomial(const GradedClass& c);

/// Inverse of render_polynomial. Also accepts repeated monomials and
/// arbitrary spacing; throws InputError on malformed text.
GradedClass parse_polynomial(std::string_view text);

}  // namespace toric::cli
