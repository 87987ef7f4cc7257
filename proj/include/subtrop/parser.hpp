#pragma once

#include "subtrop/system.hpp"

#include <string>
#include <string_view>

namespace subtrop {

// Parses the line-oriented `.spp` format:
//
//   # comment
//   vars x1 x2
//   poly f1 = -c11*x1^5 + c12*x1^2*x2
//   poly f2 = 2*x1^2*x2 - 4/3*x1^3 + 7
//   poly f3 = 0
//
// Monomials are numbered by first occurrence. The coefficient mode (named or
// numeric) is fixed by the first explicit coefficient in the file. Throws
// ParseError with a 1-based line and column.
SignedSystem parse_system(std::string_view source);

// Canonical text; parse_system(print_system(s)) == s for every s produced by parse_system.
std::string print_system(const SignedSystem& sys);

// Coefficient files: lines `name = p` or `name = p/q`, `#` comments.
CoefficientBinding parse_coefficients(std::string_view source);

} // namespace subtrop
