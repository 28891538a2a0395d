#include "tess/bicomplex.hpp"

namespace tess {

std::string_view to_string(IdealTag tag) {
  switch (tag) {
    case IdealTag::None: return "None";
    case IdealTag::FirstSet: return "FirstSet";
    case IdealTag::SecondSet: return "SecondSet";
    case IdealTag::Zero: return "Zero";
  }
  return "None";
}

Bicomplex<Rational> parse_bicomplex(std::string_view text) {
  static const CombinationSyntax syntax{{"i", "h", "k"}, false, {}};
  auto c = parse_combination(text, syntax);
  return {c[0].re, c[1].re, c[2].re, c[3].re};
}

}  // namespace tess
