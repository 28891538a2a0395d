#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "tess/scalar.hpp"

namespace tess {

// Complex number over an arbitrary scalar backend. std::complex is only
// specified for floating-point types, so the exact backend needs its own.
template <Scalar T>
struct Complex {
  T re{};
  T im{};

  Complex() = default;
  Complex(T r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  static Complex unit() { return Complex(T(0), T(1)); }

  bool is_zero() const { return re == T(0) && im == T(0); }

  Complex conj() const { return Complex(re, -im); }
  T norm_sq() const { return re * re + im * im; }

  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re + b.re, a.im + b.im);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re - b.re, a.im - b.im);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.norm_sq();
    return Complex((a.re * b.re + a.im * b.im) / d,
                   (a.im * b.re - a.re * b.im) / d);
  }
  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re == b.re && a.im == b.im;
  }

  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

template <Scalar T>
std::complex<double> to_std(const Complex<T>& z) {
  return {to_double(z.re), to_double(z.im)};
}

template <Scalar T>
Complex<T> from_std(std::complex<double> z) {
  return Complex<T>(ScalarTraits<T>::from_double(z.real()),
                    ScalarTraits<T>::from_double(z.imag()));
}

template <Scalar T>
double abs(const Complex<T>& z) {
  return std::abs(to_std(z));
}

// "(re, im)"; used for diagnostics and text output.
template <Scalar T>
std::string format_complex(const Complex<T>& z) {
  return "(" + format_scalar(z.re) + ", " + format_scalar(z.im) + ")";
}

}  // namespace tess
