#include "tess/linear_text.hpp"

#include <algorithm>
#include <cctype>

#include "tess/error.hpp"

namespace tess {

namespace {

class CombinationParser {
 public:
  CombinationParser(std::string_view text, const CombinationSyntax& syntax)
      : text_(text), syntax_(syntax), result_(syntax.units.size() + 1) {}

  std::vector<Complex<Rational>> parse() {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "element");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    term(negative);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') throw SyntaxError(pos_, "'+' or '-'");
      ++pos_;
      term(c == '-');
    }
    return result_;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Rational rational_literal() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.' || peek() == '/')) {
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "number");
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(start + e.position(), e.expected());
    }
  }

  Complex<Rational> coefficient() {
    if (peek() == '(') {
      if (!syntax_.complex_coefficients) throw SyntaxError(pos_, "number");
      ++pos_;
      Rational re = rational_literal();
      skip_ws();
      if (at_end() || peek() != ',') throw SyntaxError(pos_, "','");
      ++pos_;
      Rational im = rational_literal();
      skip_ws();
      if (at_end() || peek() != ')') throw SyntaxError(pos_, "')'");
      ++pos_;
      return {re, im};
    }
    return Complex<Rational>(rational_literal());
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // term := factor ([*] factor)*, with at most one unit among the factors.
  void term(bool negative) {
    Complex<Rational> coeff(Rational(1));
    int unit = -1;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (any && c == '*') {
        ++pos_;
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "factor after '*'");
        c = peek();
      } else if (any && !std::isalpha(static_cast<unsigned char>(c))) {
        break;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(') {
        coeff *= coefficient();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t at = pos_;
        std::string name = identifier();
        auto& units = syntax_.units;
        auto& imag = syntax_.scalar_imaginary_names;
        if (auto it = std::find(units.begin(), units.end(), name); it != units.end()) {
          if (unit >= 0) throw SyntaxError(at, "at most one unit per term");
          unit = static_cast<int>(it - units.begin());
        } else if (syntax_.complex_coefficients &&
                   std::find(imag.begin(), imag.end(), name) != imag.end()) {
          coeff *= Complex<Rational>::unit();
        } else {
          throw SyntaxError(at, "unit name");
        }
      } else {
        throw SyntaxError(pos_, "number or unit");
      }
      any = true;
    }
    if (!any) throw SyntaxError(pos_, "term");
    if (negative) coeff = -coeff;
    result_[static_cast<std::size_t>(unit + 1)] += coeff;
  }

  std::string_view text_;
  const CombinationSyntax& syntax_;
  std::vector<Complex<Rational>> result_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Complex<Rational>> parse_combination(std::string_view text,
                                                 const CombinationSyntax& syntax) {
  return CombinationParser(text, syntax).parse();
}

std::string format_combination(const std::vector<std::string>& coeffs,
                               const std::vector<std::string>& units) {
  std::string out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    std::string c = coeffs[n];
    if (c == "0" || c == "-0") continue;
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    const std::string& unit = units[n];
    std::string body;
    if (unit.empty()) {
      body = c;
    } else if (c == "1") {
      body = unit;
    } else {
      body = c + "*" + unit;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace tess
