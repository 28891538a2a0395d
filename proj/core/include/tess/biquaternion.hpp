#pragma once

// Biquaternions: quaternions c0 + c1*i + c2*j + c3*k whose coefficients are
// complex numbers re + w*im in a central imaginary w (w^2 = -1, w commutes
// with i, j, k). Equivalently q' + w*q'' with real quaternions q', q''.
//
// The fixed representation
//
//   rho(i) = diag(I, -I),  rho(j) = [[0, 1], [-1, 0]],
//   rho(k) = [[0, I], [I, 0]],  rho(w) = I * Identity
//
// (I the complex unit) is an isomorphism onto 2x2 complex matrices, so a
// biquaternion is a zero divisor (a nullifier) exactly when det rho(a) = 0.
//
// The complanar subalgebra {c0 + c1*i} is commutative and maps onto the
// bicomplex numbers by w -> h, i -> i.

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "tess/bicomplex.hpp"
#include "tess/complex.hpp"
#include "tess/error.hpp"
#include "tess/scalar.hpp"

namespace tess {

template <Scalar T>
struct Biquaternion {
  using scalar_type = T;

  // Coefficients of 1, i, j, k; each is re + w*im.
  std::array<Complex<T>, 4> c{};

  static Biquaternion scalar(Complex<T> v) {
    Biquaternion q;
    q.c[0] = std::move(v);
    return q;
  }
  static Biquaternion one() { return scalar(Complex<T>(T(1))); }
  static Biquaternion omega() { return scalar(Complex<T>::unit()); }
  static Biquaternion unit(int index) {
    Biquaternion q;
    q.c.at(static_cast<std::size_t>(index)) = Complex<T>(T(1));
    return q;
  }

  bool is_zero() const {
    for (const auto& x : c) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  // q' and q'' of q = q' + w*q''.
  std::array<T, 4> real_part() const { return {c[0].re, c[1].re, c[2].re, c[3].re}; }
  std::array<T, 4> omega_part() const { return {c[0].im, c[1].im, c[2].im, c[3].im}; }

  static Biquaternion from_parts(const std::array<T, 4>& q1, const std::array<T, 4>& q2) {
    Biquaternion q;
    for (int n = 0; n < 4; ++n) q.c[n] = Complex<T>(q1[n], q2[n]);
    return q;
  }

  friend bool operator==(const Biquaternion& a, const Biquaternion& b) { return a.c == b.c; }
};

template <Scalar T>
Biquaternion<T> bq_add(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  Biquaternion<T> r;
  for (int n = 0; n < 4; ++n) r.c[n] = a.c[n] + b.c[n];
  return r;
}

template <Scalar T>
Biquaternion<T> bq_sub(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  Biquaternion<T> r;
  for (int n = 0; n < 4; ++n) r.c[n] = a.c[n] - b.c[n];
  return r;
}

template <Scalar T>
Biquaternion<T> bq_mul(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  const auto& p = a.c;
  const auto& q = b.c;
  Biquaternion<T> r;
  r.c[0] = p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3];
  r.c[1] = p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2];
  r.c[2] = p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1];
  r.c[3] = p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0];
  return r;
}

template <Scalar T>
Biquaternion<T> operator+(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  return bq_add(a, b);
}
template <Scalar T>
Biquaternion<T> operator-(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  return bq_sub(a, b);
}
template <Scalar T>
Biquaternion<T> operator*(const Biquaternion<T>& a, const Biquaternion<T>& b) {
  return bq_mul(a, b);
}

template <Scalar T>
using MatrixImage = std::array<std::array<Complex<T>, 2>, 2>;

template <Scalar T>
MatrixImage<T> bq_to_matrix(const Biquaternion<T>& a) {
  const Complex<T> I = Complex<T>::unit();
  const auto& c = a.c;
  return {{{c[0] + I * c[1], c[2] + I * c[3]}, {-c[2] + I * c[3], c[0] - I * c[1]}}};
}

template <Scalar T>
Biquaternion<T> bq_from_matrix(const MatrixImage<T>& m) {
  const Complex<T> half(T(1) / T(2));
  const Complex<T> minus_half_I(T(0), T(-1) / T(2));  // 1/(2I)
  Biquaternion<T> q;
  q.c[0] = (m[0][0] + m[1][1]) * half;
  q.c[1] = (m[0][0] - m[1][1]) * minus_half_I;
  q.c[2] = (m[0][1] - m[1][0]) * half;
  q.c[3] = (m[0][1] + m[1][0]) * minus_half_I;
  return q;
}

template <Scalar T>
MatrixImage<T> matrix_mul(const MatrixImage<T>& a, const MatrixImage<T>& b) {
  MatrixImage<T> r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return r;
}

// det rho(a) = c0^2 + c1^2 + c2^2 + c3^2 (complex).
template <Scalar T>
Complex<T> bq_determinant(const Biquaternion<T>& a) {
  auto m = bq_to_matrix(a);
  return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

template <Scalar T>
double coefficient_norm(const Biquaternion<T>& a) {
  double s = 0;
  for (const auto& x : a.c) s += to_double(x.norm_sq());
  return std::sqrt(s);
}

// Exact test on the rational backend; |det| <= 1e-12 * (1 + |a|^2) on doubles.
template <Scalar T>
bool bq_is_nullifier(const Biquaternion<T>& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "zero is not classified");
  Complex<T> det = bq_determinant(a);
  if constexpr (is_exact_v<T>) {
    return det.is_zero();
  } else {
    double n = coefficient_norm(a);
    return abs(det) <= 1e-12 * (1.0 + n * n);
  }
}

template <Scalar T>
bool is_complanar(const Biquaternion<T>& a) {
  return a.c[2].is_zero() && a.c[3].is_zero();
}

// (p + w q) + (r + w s) i  ->  p + r*i + q*h + s*k
template <Scalar T>
Bicomplex<T> complanar_to_bicomplex(const Biquaternion<T>& a) {
  if (!is_complanar(a)) {
    throw Error(ErrorKind::NotComplanar, "j or k coefficient is nonzero");
  }
  return {a.c[0].re, a.c[1].re, a.c[0].im, a.c[1].im};
}

template <Scalar T>
Biquaternion<T> bicomplex_to_complanar(const Bicomplex<T>& b) {
  Biquaternion<T> q;
  q.c[0] = Complex<T>(b.w, b.y);
  q.c[1] = Complex<T>(b.x, b.z);
  q.c[2] = Complex<T>(T(0));
  q.c[3] = Complex<T>(T(0));
  return q;
}

template <Scalar T>
Biquaternion<double> bq_to_double(const Biquaternion<T>& a) {
  Biquaternion<double> r;
  for (int n = 0; n < 4; ++n) r.c[n] = Complex<double>(to_double(a.c[n].re), to_double(a.c[n].im));
  return r;
}

// Text form over units i, j, k with "(re,im)" coefficients; purely real or
// purely w coefficients print as plain numbers or "x*w".
std::string format_biquaternion(const Biquaternion<double>& q);
std::string format_biquaternion(const Biquaternion<Rational>& q);

// Accepts "(re,im) + (re,im)*i + ...", plain rationals, and the scalar
// imaginary written as w, e.g. "k + w" or "1/2*i - (0,1/2)*k".
Biquaternion<Rational> parse_biquaternion(std::string_view text);

struct QuadraticSolution {
  Biquaternion<double> q;
  double residual = 0.0;         // coefficient norm of q^2 - q*b - c
  bool real_quaternion = false;  // every w-part vanishes
};

struct QuadraticSolveResult {
  std::vector<QuadraticSolution> solutions;
  std::vector<std::complex<double>> eigenvalues;  // of the block companion
};

// Isolated solutions of q^2 = q*b + c. With X = rho(q) the equation is
// X^2 = X B + C; transposing gives Y^2 - B^T Y - C^T = 0 for Y = X^T, whose
// solvents are V diag(l1, l2) V^-1 for pairs of eigenpairs of the block
// companion [[0, I], [C^T, B^T]] with independent top halves. Each of the
// (at most six) pairs yields a candidate; candidates are Newton-polished,
// mapped back through rho, and deduplicated at radius 1e-7 * scale.
// Throws DegenerateSpectrum when the companion has a repeated eigenvalue,
// which is where continua of solutions (e.g. q^2 = -1) arise.
QuadraticSolveResult bq_solve_quadratic(const Biquaternion<double>& b,
                                        const Biquaternion<double>& c);

}  // namespace tess
