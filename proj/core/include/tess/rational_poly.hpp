#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tess/scalar.hpp"

namespace tess {

// Dense univariate polynomial over the rationals in x, ascending degree,
// always trimmed (no zero leading coefficient; the zero polynomial is empty).
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<Rational> coeffs);
  static QPoly constant(Rational c);
  static QPoly x();

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  std::complex<double> operator()(std::complex<double> x) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const Rational& s, const QPoly& a);
  QPoly operator-() const;
  QPoly pow(unsigned n) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;
  friend auto operator<=>(const QPoly& a, const QPoly& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

  // Integer coefficients with gcd 1 and positive leading coefficient.
  QPoly primitive() const;

  // Divides by (x - r); returns false (leaving out untouched) when r is not a
  // root.
  bool divide_root(const Rational& r, QPoly& out) const;

  // "3*x^2 - 20*x + 32"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace tess
