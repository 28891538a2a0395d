#pragma once

// The commutative tower MC(n): n commuting imaginary units i1..in, each
// squaring to -1. MC(1) is C, MC(2) is the bicomplex algebra under
// (1, i1, i2, i1 i2) <-> (1, i, h, k), MC(3) is the octrine.
//
// Coefficients are stored densely, indexed by the bitmask of the unit subset
// (bit m <-> unit i_{m+1}). The product of basis monomials is
//
//   e_S * e_T = (-1)^|S & T| * e_{S ^ T}
//
// since the units commute and each repeated unit contributes a factor -1.
//
// The split repeatedly writes a = x + i1*y with x, y free of i1 and maps it
// to (x + i2*y, x - i2*y), halving the order each step; after n-1 steps every
// component lies in C. The result (the spectrum) has 2^(n-1) entries and the
// map is an algebra isomorphism onto C^(2^(n-1)) with componentwise
// operations.

#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tess/bicomplex.hpp"
#include "tess/complex.hpp"
#include "tess/error.hpp"
#include "tess/scalar.hpp"

namespace tess {

inline constexpr int kMaxMulticomplexOrder = 16;

template <Scalar T>
class Multicomplex {
 public:
  using scalar_type = T;

  explicit Multicomplex(int order) : order_(checked(order)), coeffs_(dim_of(order)) {}

  Multicomplex(int order, std::vector<T> coeffs)
      : order_(checked(order)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != dim_of(order_)) {
      throw Error(ErrorKind::InvalidArgument,
                  "order " + std::to_string(order_) + " needs " +
                      std::to_string(dim_of(order_)) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
    }
  }

  static Multicomplex scalar(int order, T value) {
    Multicomplex m(order);
    m.coeffs_[0] = std::move(value);
    return m;
  }

  static Multicomplex basis(int order, std::uint32_t mask, T value = T(1)) {
    Multicomplex m(order);
    if (mask >= m.dim()) {
      throw Error(ErrorKind::InvalidArgument, "basis mask out of range");
    }
    m.coeffs_[mask] = std::move(value);
    return m;
  }

  // Generator i_{index+1}.
  static Multicomplex unit(int order, int index) {
    return basis(order, std::uint32_t{1} << index);
  }

  int order() const { return order_; }
  std::size_t dim() const { return coeffs_.size(); }
  const T& operator[](std::size_t mask) const { return coeffs_[mask]; }
  T& operator[](std::size_t mask) { return coeffs_[mask]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const T& c : coeffs_) {
      if (!(c == T(0))) return false;
    }
    return true;
  }

  friend bool operator==(const Multicomplex& a, const Multicomplex& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  static std::size_t dim_of(int order) { return std::size_t{1} << order; }

 private:
  static int checked(int order) {
    if (order < 1 || order > kMaxMulticomplexOrder) {
      throw Error(ErrorKind::InvalidArgument,
                  "multicomplex order must be in 1.." +
                      std::to_string(kMaxMulticomplexOrder));
    }
    return order;
  }

  int order_;
  std::vector<T> coeffs_;
};

template <Scalar T>
using SpectrumVector = std::vector<Complex<T>>;

namespace detail {

template <Scalar T>
void require_same_order(const Multicomplex<T>& a, const Multicomplex<T>& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch,
                "orders differ: " + std::to_string(a.order()) + " vs " +
                    std::to_string(b.order()));
  }
}

inline int basis_sign(std::size_t s, std::size_t t) {
  return (std::popcount(s & t) % 2 == 0) ? 1 : -1;
}

}  // namespace detail

template <Scalar T>
Multicomplex<T> mc_add(const Multicomplex<T>& a, const Multicomplex<T>& b) {
  detail::require_same_order(a, b);
  Multicomplex<T> r(a.order());
  for (std::size_t s = 0; s < a.dim(); ++s) r[s] = a[s] + b[s];
  return r;
}

template <Scalar T>
Multicomplex<T> mc_sub(const Multicomplex<T>& a, const Multicomplex<T>& b) {
  detail::require_same_order(a, b);
  Multicomplex<T> r(a.order());
  for (std::size_t s = 0; s < a.dim(); ++s) r[s] = a[s] - b[s];
  return r;
}

template <Scalar T>
Multicomplex<T> mc_mul(const Multicomplex<T>& a, const Multicomplex<T>& b) {
  detail::require_same_order(a, b);
  Multicomplex<T> r(a.order());
  for (std::size_t s = 0; s < a.dim(); ++s) {
    if (a[s] == T(0)) continue;
    for (std::size_t t = 0; t < b.dim(); ++t) {
      if (b[t] == T(0)) continue;
      T term = a[s] * b[t];
      if (detail::basis_sign(s, t) > 0) {
        r[s ^ t] += term;
      } else {
        r[s ^ t] -= term;
      }
    }
  }
  return r;
}

namespace detail {

// Multiplication by the first generator of the algebra.
template <Scalar T>
Multicomplex<T> times_first_unit(const Multicomplex<T>& a) {
  Multicomplex<T> r(a.order());
  for (std::size_t s = 0; s < a.dim(); ++s) {
    r[s ^ 1] = (s & 1) ? T(-a[s]) : a[s];
  }
  return r;
}

template <Scalar T>
void split_into(const Multicomplex<T>& a, SpectrumVector<T>& out) {
  if (a.order() == 1) {
    out.emplace_back(a[0], a[1]);
    return;
  }
  // a = x + i1*y, x and y relabelled to the units i2..in.
  Multicomplex<T> x(a.order() - 1), y(a.order() - 1);
  for (std::size_t s = 0; s < x.dim(); ++s) {
    x[s] = a[s << 1];
    y[s] = a[(s << 1) | 1];
  }
  Multicomplex<T> iy = times_first_unit(y);
  split_into(mc_add(x, iy), out);
  split_into(mc_sub(x, iy), out);
}

template <Scalar T>
Multicomplex<T> unsplit_range(int order, const Complex<T>* first) {
  if (order == 1) return Multicomplex<T>(1, {first->re, first->im});
  std::size_t half = std::size_t{1} << (order - 2);
  Multicomplex<T> z1 = unsplit_range(order - 1, first);
  Multicomplex<T> z2 = unsplit_range(order - 1, first + half);
  const T half_t = T(1) / T(2);
  Multicomplex<T> sum = mc_add(z1, z2);
  // z1 - z2 = 2*i*y  =>  y = -i*(z1 - z2)/2
  Multicomplex<T> diff = times_first_unit(mc_sub(z1, z2));
  Multicomplex<T> r(order);
  for (std::size_t s = 0; s < sum.dim(); ++s) {
    r[s << 1] = sum[s] * half_t;
    r[(s << 1) | 1] = -diff[s] * half_t;
  }
  return r;
}

}  // namespace detail

template <Scalar T>
SpectrumVector<T> mc_split(const Multicomplex<T>& a) {
  SpectrumVector<T> out;
  out.reserve(std::size_t{1} << (a.order() - 1));
  detail::split_into(a, out);
  return out;
}

template <Scalar T>
Multicomplex<T> mc_unsplit(int order, const SpectrumVector<T>& spectrum) {
  if (order < 1 || order > kMaxMulticomplexOrder ||
      spectrum.size() != (std::size_t{1} << (order - 1))) {
    throw Error(ErrorKind::InvalidArgument,
                "spectrum length does not match order " + std::to_string(order));
  }
  return detail::unsplit_range(order, spectrum.data());
}

template <Scalar T>
double coefficient_norm(const Multicomplex<T>& a) {
  double s = 0;
  for (const T& c : a.coeffs()) {
    double d = to_double(c);
    s += d * d;
  }
  return std::sqrt(s);
}

template <Scalar T>
bool mc_is_zero_divisor(const Multicomplex<T>& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroInput, "zero has no divisor class");
  double tol = 1e-12 * (1.0 + coefficient_norm(a));
  for (const Complex<T>& c : mc_split(a)) {
    if constexpr (is_exact_v<T>) {
      if (c.is_zero()) return true;
    } else {
      if (abs(c) <= tol) return true;
    }
  }
  return false;
}

// Primitive idempotent whose spectrum is the indicator of `component`.
template <Scalar T>
Multicomplex<T> mc_primitive_idempotent(int order, std::size_t component) {
  SpectrumVector<T> spec(std::size_t{1} << (order - 1), Complex<T>(T(0)));
  spec.at(component) = Complex<T>(T(1));
  return mc_unsplit(order, spec);
}

template <Scalar T>
Multicomplex<T> mc_from_bicomplex(const Bicomplex<T>& b) {
  return Multicomplex<T>(2, {b.w, b.x, b.y, b.z});
}

template <Scalar T>
Bicomplex<T> mc_to_bicomplex(const Multicomplex<T>& m) {
  if (m.order() != 2) throw Error(ErrorKind::OrderMismatch, "expected order 2");
  return {m[0], m[1], m[2], m[3]};
}

// External coefficient order: subsets by size, then lexicographically, e.g.
// for n = 3: 1, i1, i2, i3, i1i2, i1i3, i2i3, i1i2i3. Returns the bitmask of
// each position.
std::vector<std::uint32_t> graded_subset_order(int order);

// Unit-monomial names in graded order ("1", "i1", "i1i2", ...).
std::vector<std::string> graded_subset_names(int order);

template <Scalar T>
Multicomplex<T> mc_from_graded(int order, const std::vector<T>& values) {
  auto masks = graded_subset_order(order);
  if (values.size() != masks.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "order " + std::to_string(order) + " needs " +
                    std::to_string(masks.size()) + " coefficients, got " +
                    std::to_string(values.size()));
  }
  Multicomplex<T> m(order);
  for (std::size_t n = 0; n < masks.size(); ++n) m[masks[n]] = values[n];
  return m;
}

template <Scalar T>
std::vector<T> mc_to_graded(const Multicomplex<T>& m) {
  auto masks = graded_subset_order(m.order());
  std::vector<T> out;
  out.reserve(masks.size());
  for (auto mask : masks) out.push_back(m[mask]);
  return out;
}

}  // namespace tess
