#include "tess/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "tess/error.hpp"

namespace tess {

namespace {

bool parse_unsigned(std::string_view text, std::size_t& pos, Integer& out) {
  std::size_t start = pos;
  out = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    out = out * 10 + (text[pos] - '0');
    ++pos;
  }
  return pos > start;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  Integer whole;
  if (!parse_unsigned(text, pos, whole)) throw SyntaxError(pos, "digit");
  Rational value(whole);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    Integer scale = 1;
    Integer frac = 0;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      frac = frac * 10 + (text[pos] - '0');
      scale *= 10;
      ++pos;
    }
    if (pos == start) throw SyntaxError(pos, "digit after '.'");
    value += Rational(frac, scale);
  }
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    Integer den;
    if (!parse_unsigned(text, pos, den)) throw SyntaxError(pos, "denominator");
    if (den == 0) throw SyntaxError(pos, "nonzero denominator");
    value /= Rational(den);
  }
  if (pos != text.size()) throw SyntaxError(pos, "end of number");
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

std::string format_double(double v) {
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool exact_sqrt(const Rational& v, Rational& out) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (v < 0) return false;
  Integer num = numerator(v);
  Integer den = denominator(v);
  Integer rn = boost::multiprecision::sqrt(num);
  Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  out = Rational(rn, rd);
  return true;
}

Rational best_rational(double v, long long max_den) {
  if (!std::isfinite(v)) return Rational(0);
  bool negative = v < 0;
  double x = std::fabs(v);
  // Convergents h/k.
  Integer h_prev = 1, h = static_cast<long long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
    double inv = 1.0 / frac;
    double a_d = std::floor(inv);
    if (a_d > 1e12) break;
    Integer a = static_cast<long long>(a_d);
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_d;
  }
  Rational r(h, k);
  return negative ? Rational(-r) : r;
}

}  // namespace tess
