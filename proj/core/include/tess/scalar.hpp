#pragma once

// Scalar backends. Every algebra in the library is generic over the scalar
// type: `Rational` is exact and used for algebraic identities, `double` is
// used by the numerical solvers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace tess {

// Expression templates off: values behave like plain arithmetic types, so
// `auto` in generic code always holds a number.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                  boost::multiprecision::et_off>;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double v) { return v; }
  static double from_double(double v) { return v; }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& v) { return v.convert_to<double>(); }
  // Exact binary expansion of the double.
  static Rational from_double(double v) { return Rational(v); }
};

template <class T>
concept Scalar = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a / b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  ScalarTraits<T>::exact;
};

template <class T>
constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <class T>
  requires requires { ScalarTraits<T>::exact; }
double to_double(const T& v) {
  return ScalarTraits<T>::to_double(v);
}

// Accepts integers, decimals ("1.25") and fractions ("-3/4"); the whole
// string must be consumed. Throws SyntaxError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& v);

// Fixed 17 significant digits; negative zero prints as "0".
std::string format_double(double v);

template <class T>
std::string format_scalar(const T& v) {
  if constexpr (is_exact_v<T>) {
    return to_string(v);
  } else {
    return format_double(v);
  }
}

// Exact square root of a nonnegative rational when it is a perfect square.
bool exact_sqrt(const Rational& v, Rational& out);

// Continued-fraction best approximation with denominator at most max_den.
Rational best_rational(double v, long long max_den);

}  // namespace tess
