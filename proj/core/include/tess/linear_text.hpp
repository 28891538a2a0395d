#pragma once

// Text syntax for elements written as linear combinations of named units,
// e.g. "1 - 1/2*k", "3h + i", "(0,1) + (1,0)*k".

#include <string>
#include <string_view>
#include <vector>

#include "tess/complex.hpp"
#include "tess/scalar.hpp"

namespace tess {

struct CombinationSyntax {
  // Unit names; index 0 of the result is the scalar part, index u+1 belongs
  // to units[u].
  std::vector<std::string> units;
  // Accept "(re,im)" coefficients.
  bool complex_coefficients = false;
  // Names that act as the scalar imaginary unit (only with complex
  // coefficients), e.g. "w" for a central imaginary.
  std::vector<std::string> scalar_imaginary_names;
};

// Throws SyntaxError with the offending position.
std::vector<Complex<Rational>> parse_combination(std::string_view text,
                                                 const CombinationSyntax& syntax);

// Joins coefficient strings into "c0 + c1*u1 - c2*u2 ...". Zero coefficients
// ("0") are skipped and unit coefficients print as the bare unit name.
// An empty unit name denotes the scalar part.
std::string format_combination(const std::vector<std::string>& coeffs,
                               const std::vector<std::string>& units);

}  // namespace tess
