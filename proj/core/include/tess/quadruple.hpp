#pragma once

// Four-dimensional real algebras on the basis (1, a, b, c) with a^2, b^2 in
// {+1, -1} and ab = c. The remaining products (ba, ac, ca, bc, cb, c^2) are
// found by exhaustive search over signed basis units, keeping exactly the
// assignments that make the algebra associative. Each sign pattern admits
// one commutative and one anticommuting table; the four classical systems
// are
//
//   quaternion    a^2 = -1, b^2 = -1, anticommuting
//   tessarine     a^2 = -1, b^2 = +1, commutative
//   coquaternion  a^2 = -1, b^2 = +1, anticommuting  (c^2 = +1)
//   cotessarine   a^2 = +1, b^2 = +1, commutative
//
// A system is normal when its multiplication is commutative.

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tess/error.hpp"
#include "tess/scalar.hpp"

namespace tess {

// +/- e_index; index 0 is the scalar unit.
struct SignedUnit {
  int sign = 1;
  int index = 0;

  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

SignedUnit operator*(int sign, SignedUnit u);

// "1", "-1", "a", "-c", ...
std::string to_string(SignedUnit u);

struct QuadSignature {
  int sq_a = -1;
  int sq_b = -1;
};

class CayleyTable {
 public:
  using Grid = std::array<std::array<SignedUnit, 4>, 4>;

  explicit CayleyTable(Grid products) : products_(products) {}

  SignedUnit operator()(int row, int col) const { return products_[row][col]; }
  const Grid& products() const { return products_; }

  // Product of two signed units through the table.
  SignedUnit multiply(SignedUnit u, SignedUnit v) const;

  QuadSignature signature() const;
  int sq_c() const { return products_[3][3].sign; }

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;

 private:
  Grid products_;
};

bool is_associative(const CayleyTable& t);
bool is_normal(const CayleyTable& t);

// All associative tables for the signature with ab = +c, sorted so that the
// commutative table comes first.
std::vector<CayleyTable> derive_table(QuadSignature sig);

enum class QuadSystem { Quaternion, Tessarine, Coquaternion, Cotessarine };

std::string_view to_string(QuadSystem s);
std::optional<QuadSystem> parse_quad_system(std::string_view name);
const std::array<QuadSystem, 4>& all_quad_systems();

QuadSignature signature_of(QuadSystem s);

// Selects the named system from derive_table(signature_of(s)).
CayleyTable system_table(QuadSystem s);

template <Scalar T>
struct QuadElement {
  std::array<T, 4> c{};
  std::shared_ptr<const CayleyTable> table;
};

template <Scalar T>
QuadElement<T> quad_element(std::shared_ptr<const CayleyTable> table, T w, T x,
                            T y, T z) {
  return {{std::move(w), std::move(x), std::move(y), std::move(z)},
          std::move(table)};
}

namespace detail {
template <Scalar T>
void require_same_table(const QuadElement<T>& u, const QuadElement<T>& v) {
  if (!u.table || !v.table) {
    throw Error(ErrorKind::InvalidArgument, "element has no table");
  }
  if (u.table != v.table && !(*u.table == *v.table)) {
    throw Error(ErrorKind::TableMismatch, "elements belong to different tables");
  }
}
}  // namespace detail

template <Scalar T>
QuadElement<T> quad_add(const QuadElement<T>& u, const QuadElement<T>& v) {
  detail::require_same_table(u, v);
  QuadElement<T> r{{}, u.table};
  for (int n = 0; n < 4; ++n) r.c[n] = u.c[n] + v.c[n];
  return r;
}

template <Scalar T>
QuadElement<T> quad_mul(const QuadElement<T>& u, const QuadElement<T>& v) {
  detail::require_same_table(u, v);
  QuadElement<T> r{{T(0), T(0), T(0), T(0)}, u.table};
  const CayleyTable& t = *u.table;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      SignedUnit e = t(p, q);
      T term = u.c[p] * v.c[q];
      if (e.sign > 0) {
        r.c[e.index] += term;
      } else {
        r.c[e.index] -= term;
      }
    }
  }
  return r;
}

// Matrix of v -> u*v in the basis (1, a, b, c); column q is u * e_q.
template <Scalar T>
std::array<std::array<T, 4>, 4> left_mul_matrix(const QuadElement<T>& u) {
  std::array<std::array<T, 4>, 4> m{};
  for (auto& row : m) row.fill(T(0));
  const CayleyTable& t = *u.table;
  for (int p = 0; p < 4; ++p) {
    for (int q = 0; q < 4; ++q) {
      SignedUnit e = t(p, q);
      if (e.sign > 0) {
        m[e.index][q] += u.c[p];
      } else {
        m[e.index][q] -= u.c[p];
      }
    }
  }
  return m;
}

// Gaussian elimination with row pivoting; exact for the rational backend.
template <Scalar T, std::size_t N>
T determinant(std::array<std::array<T, N>, N> m) {
  T det(1);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t pivot = col;
    if constexpr (is_exact_v<T>) {
      while (pivot < N && m[pivot][col] == T(0)) ++pivot;
      if (pivot == N) return T(0);
    } else {
      for (std::size_t r = col + 1; r < N; ++r) {
        if (std::abs(to_double(m[r][col])) > std::abs(to_double(m[pivot][col]))) {
          pivot = r;
        }
      }
      if (m[pivot][col] == T(0)) return T(0);
    }
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < N; ++r) {
      if (m[r][col] == T(0)) continue;
      T f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < N; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

// Determinant of left multiplication; multiplicative in u.
template <Scalar T>
T norm_form(const QuadElement<T>& u) {
  return determinant(left_mul_matrix(u));
}

// Unit names used when printing a named system's table.
std::array<std::string, 4> unit_names(QuadSystem s);

}  // namespace tess
