#pragma once

// Direct floating evaluation of surd equations, independent of the quotient
// ring used by the library.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "tess/surd.hpp"

namespace oracle {

// Value of congener `flips` at x using principal complex square roots.
inline std::complex<double> congener_value(const tess::SurdEquation& eq, std::size_t flips,
                                           double x) {
  std::complex<double> v = eq.base(x);
  for (std::size_t m = 0; m < eq.terms.size(); ++m) {
    int sign = eq.terms[m].sign * (((flips >> m) & 1U) ? -1 : 1);
    v += static_cast<double>(sign) * eq.terms[m].coefficient(x) *
         std::sqrt(std::complex<double>(eq.terms[m].radicand(x), 0.0));
  }
  return v;
}

inline std::complex<double> congener_product(const tess::SurdEquation& eq, double x) {
  std::complex<double> p = 1.0;
  for (std::size_t f = 0; f < (std::size_t{1} << eq.terms.size()); ++f) p *= congener_value(eq, f, x);
  return p;
}

// Congeners whose value at x is below tol * (1 + |base| + sum |Q sqrt R|).
inline std::vector<std::size_t> vanishing_by_sign_enumeration(const tess::SurdEquation& eq,
                                                              double x, double tol) {
  double scale = 1.0 + std::abs(eq.base(x));
  for (const auto& t : eq.terms) {
    scale += std::abs(t.coefficient(x) * std::sqrt(std::complex<double>(t.radicand(x), 0.0)));
  }
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < (std::size_t{1} << eq.terms.size()); ++f) {
    if (std::abs(congener_value(eq, f, x)) <= tol * scale) out.push_back(f);
  }
  return out;
}

}  // namespace oracle
