#pragma once

// Bicomplex numbers (tessarines).
//
// An element is w + x*i + y*h + z*k on the ordered basis (1, i, h, k) with
//
//   i^2 = h^2 = -1,   k = ih = hi,   k^2 = +1.
//
// The same algebra appears under two namings: with units (1, i, h, ih) and
// with Cockle's tessarine units (1, i, j, k') where j^2 = +1. This type is the
// single home for both; Cockle's j corresponds to k here.
//
// Writing a = X + i*Y with X, Y in the h-plane, the idempotents
// g = (1 - hi)/2 and g' = (1 + hi)/2 split a as a = Z*g + Z'*g' with
// Z = X + h*Y and Z' = X - h*Y. The map a -> (Z, Z') is an algebra
// isomorphism onto C + C with componentwise operations, which is how
// inversion, norm and zero-divisor classification are computed.

#include <cmath>
#include <string>
#include <tuple>

#include "tess/complex.hpp"
#include "tess/error.hpp"
#include "tess/linear_text.hpp"
#include "tess/scalar.hpp"

namespace tess {

template <Scalar T>
struct Bicomplex {
  using scalar_type = T;

  T w{}, x{}, y{}, z{};

  Bicomplex() = default;
  Bicomplex(T w_, T x_, T y_, T z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Bicomplex scalar(T v) { return {std::move(v), T(0), T(0), T(0)}; }
  static Bicomplex one() { return scalar(T(1)); }
  static Bicomplex i() { return {T(0), T(1), T(0), T(0)}; }
  static Bicomplex h() { return {T(0), T(0), T(1), T(0)}; }
  static Bicomplex k() { return {T(0), T(0), T(0), T(1)}; }

  bool is_zero() const {
    return w == T(0) && x == T(0) && y == T(0) && z == T(0);
  }

  friend bool operator==(const Bicomplex& a, const Bicomplex& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

// Idempotents g = 1/2 - k/2 and g' = 1/2 + k/2.
template <Scalar T>
Bicomplex<T> idempotent_g() {
  return {T(1) / T(2), T(0), T(0), T(-1) / T(2)};
}
template <Scalar T>
Bicomplex<T> idempotent_g_prime() {
  return {T(1) / T(2), T(0), T(0), T(1) / T(2)};
}

template <Scalar T>
struct SplitPair {
  Complex<T> z1;  // Z  (i replaced by  h)
  Complex<T> z2;  // Z' (i replaced by -h)

  friend bool operator==(const SplitPair& a, const SplitPair& b) {
    return a.z1 == b.z1 && a.z2 == b.z2;
  }
  friend SplitPair operator+(const SplitPair& a, const SplitPair& b) {
    return {a.z1 + b.z1, a.z2 + b.z2};
  }
  friend SplitPair operator*(const SplitPair& a, const SplitPair& b) {
    return {a.z1 * b.z1, a.z2 * b.z2};
  }
};

enum class IdealTag { None, FirstSet, SecondSet, Zero };

std::string_view to_string(IdealTag tag);

template <Scalar T>
Bicomplex<T> bc_add(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

template <Scalar T>
Bicomplex<T> bc_sub(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

template <Scalar T>
Bicomplex<T> bc_scale(const Bicomplex<T>& a, const T& s) {
  return {a.w * s, a.x * s, a.y * s, a.z * s};
}

template <Scalar T>
Bicomplex<T> bc_mul(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  // ik = -h, hk = -i, k^2 = 1
  return {a.w * b.w - a.x * b.x - a.y * b.y + a.z * b.z,
          a.w * b.x + a.x * b.w - a.y * b.z - a.z * b.y,
          a.w * b.y + a.y * b.w - a.x * b.z - a.z * b.x,
          a.w * b.z + a.z * b.w + a.x * b.y + a.y * b.x};
}

template <Scalar T>
Bicomplex<T> operator+(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  return bc_add(a, b);
}
template <Scalar T>
Bicomplex<T> operator-(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  return bc_sub(a, b);
}
template <Scalar T>
Bicomplex<T> operator*(const Bicomplex<T>& a, const Bicomplex<T>& b) {
  return bc_mul(a, b);
}

// Z = (w - z) + h(x + y),  Z' = (w + z) + h(y - x), with h read as the
// complex unit of each component.
template <Scalar T>
SplitPair<T> bc_decompose(const Bicomplex<T>& a) {
  return {Complex<T>(a.w - a.z, a.x + a.y), Complex<T>(a.w + a.z, a.y - a.x)};
}

template <Scalar T>
Bicomplex<T> bc_recompose(const SplitPair<T>& p) {
  const T two(2);
  return {(p.z1.re + p.z2.re) / two, (p.z1.im - p.z2.im) / two,
          (p.z1.im + p.z2.im) / two, (p.z2.re - p.z1.re) / two};
}

template <Scalar T>
double coefficient_norm(const Bicomplex<T>& a) {
  double w = to_double(a.w), x = to_double(a.x), y = to_double(a.y),
         z = to_double(a.z);
  return std::sqrt(w * w + x * x + y * y + z * z);
}

// Exact backend compares with zero; the float backend treats a split
// component as zero when |Z| <= 1e-12 * (1 + |a|).
template <Scalar T>
bool split_component_is_zero(const Complex<T>& c, const Bicomplex<T>& a) {
  if constexpr (is_exact_v<T>) {
    return c.is_zero();
  } else {
    return abs(c) <= 1e-12 * (1.0 + coefficient_norm(a));
  }
}

template <Scalar T>
IdealTag bc_ideal(const Bicomplex<T>& a) {
  auto [z1, z2] = bc_decompose(a);
  bool zero1 = split_component_is_zero(z1, a);
  bool zero2 = split_component_is_zero(z2, a);
  if (zero1 && zero2) return IdealTag::Zero;
  if (zero2) return IdealTag::FirstSet;
  if (zero1) return IdealTag::SecondSet;
  return IdealTag::None;
}

// N(a)^2 = |Z|^2 |Z'|^2, exact on the rational backend.
template <Scalar T>
T bc_norm_sq(const Bicomplex<T>& a) {
  auto p = bc_decompose(a);
  return p.z1.norm_sq() * p.z2.norm_sq();
}

// N(a) = |Z| |Z'|; multiplicative, vanishes exactly on the nullifics.
template <Scalar T>
double bc_norm(const Bicomplex<T>& a) {
  auto p = bc_decompose(a);
  return std::sqrt(to_double(p.z1.norm_sq())) *
         std::sqrt(to_double(p.z2.norm_sq()));
}

template <Scalar T>
Bicomplex<T> bc_inverse(const Bicomplex<T>& a) {
  IdealTag tag = bc_ideal(a);
  if (tag != IdealTag::None) {
    throw Error(ErrorKind::NotInvertible,
                std::string("element is not invertible (") +
                    std::string(to_string(tag)) + ")");
  }
  auto p = bc_decompose(a);
  const Complex<T> one(T(1));
  return bc_recompose(SplitPair<T>{one / p.z1, one / p.z2});
}

template <Scalar T>
struct Conjugates {
  Bicomplex<T> conj_i;   // i -> -i
  Bicomplex<T> conj_h;   // h -> -h
  Bicomplex<T> conj_ih;  // both
};

template <Scalar T>
Conjugates<T> bc_conjugates(const Bicomplex<T>& a) {
  return {{a.w, -a.x, a.y, -a.z},
          {a.w, a.x, -a.y, -a.z},
          {a.w, -a.x, -a.y, a.z}};
}

template <Scalar T>
Bicomplex<double> bc_to_double(const Bicomplex<T>& a) {
  return {to_double(a.w), to_double(a.x), to_double(a.y), to_double(a.z)};
}

// Text form "w + x*i + y*h + z*k", zero terms omitted, "0" for zero.
template <Scalar T>
std::string format_bicomplex(const Bicomplex<T>& a) {
  return format_combination({format_scalar(a.w), format_scalar(a.x),
                             format_scalar(a.y), format_scalar(a.z)},
                            {"", "i", "h", "k"});
}

// Parses a linear combination over the units i, h, k with rational
// coefficients, e.g. "1/2 - 1/2*k" or "3 + i - 2h".
Bicomplex<Rational> parse_bicomplex(std::string_view text);

}  // namespace tess
