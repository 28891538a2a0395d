#pragma once

// Univariate polynomial equations with bicomplex or multicomplex
// coefficients. The idempotent split turns
//
//   sum_l a_l z^l = 0
//
// into independent complex equations, one per split component. If every
// component polynomial is nonzero with degrees m_1..m_r, the roots are all
// recombinations of component roots (m_1 * ... * m_r of them counted with
// multiplicity; m^2 for a bicomplex equation with invertible leading
// coefficient). If some component polynomial vanishes identically (all
// coefficients are zero divisors of the same set) that component is free and
// the equation has infinitely many solutions.

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

#include "tess/bicomplex.hpp"
#include "tess/complex.hpp"
#include "tess/error.hpp"
#include "tess/multicomplex.hpp"
#include "tess/roots.hpp"
#include "tess/scalar.hpp"

namespace tess {

// Ascending degree; an empty vector is the zero polynomial.
template <Scalar T>
using ComponentPolynomial = std::vector<Complex<T>>;

template <Scalar T>
using BicomplexPolynomial = std::vector<Bicomplex<T>>;

template <Scalar T>
using MulticomplexPolynomial = std::vector<Multicomplex<T>>;

template <Scalar T>
struct ComponentRoot {
  Complex<T> value;
  int multiplicity = 1;
  bool exact = false;  // value verified to be an exact root
};

template <Scalar T>
ComponentPolynomial<T> trim(ComponentPolynomial<T> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

// -1 for the zero polynomial.
template <Scalar T>
int effective_degree(const ComponentPolynomial<T>& p) {
  return static_cast<int>(trim(p).size()) - 1;
}

template <Scalar T>
struct SplitPolynomial {
  ComponentPolynomial<T> first;   // Z components of the coefficients
  ComponentPolynomial<T> second;  // Z' components
  int m = -1;                     // effective degrees
  int m_prime = -1;
  bool degenerate = false;  // a component is identically zero
};

template <Scalar T>
SplitPolynomial<T> split_polynomial(const BicomplexPolynomial<T>& p) {
  SplitPolynomial<T> s;
  for (const auto& c : p) {
    SplitPair<T> d = bc_decompose(c);
    s.first.push_back(d.z1);
    s.second.push_back(d.z2);
  }
  s.first = trim(std::move(s.first));
  s.second = trim(std::move(s.second));
  s.m = effective_degree(s.first);
  s.m_prime = effective_degree(s.second);
  s.degenerate = s.first.empty() || s.second.empty();
  return s;
}

namespace detail {

template <Scalar T>
bool divide_linear(const ComponentPolynomial<T>& p, const Complex<T>& r,
                   ComponentPolynomial<T>& quotient) {
  const std::size_t n = p.size() - 1;
  quotient.assign(n, Complex<T>());
  Complex<T> carry = p[n];
  for (std::size_t k = n; k-- > 0;) {
    quotient[k] = carry;
    carry = p[k] + r * carry;
  }
  return carry.is_zero();
}

}  // namespace detail

// Roots of a nonzero component polynomial of degree >= 1, clustered at
// radius 1e-7 * scale. On the exact backend each cluster is matched to a
// nearby Gaussian rational; the match is kept (with its exact multiplicity)
// only when exact division confirms it.
template <Scalar T>
std::vector<ComponentRoot<T>> component_roots(const ComponentPolynomial<T>& poly) {
  ComponentPolynomial<T> p = trim(poly);
  ComplexPolynomial q;
  q.reserve(p.size());
  for (const auto& c : p) q.push_back(to_std(c));
  std::vector<std::complex<double>> raw = complex_roots(q);
  std::vector<RootCluster> clusters = cluster_roots(raw, 1e-7 * root_scale(raw));

  std::vector<ComponentRoot<T>> out;
  if constexpr (!is_exact_v<T>) {
    for (const auto& c : clusters) {
      out.push_back({Complex<T>(c.value.real(), c.value.imag()), c.multiplicity, false});
    }
  } else {
    ComponentPolynomial<T> rest = p;
    for (const auto& c : clusters) {
      Complex<T> candidate(best_rational(c.value.real(), 1'000'000),
                           best_rational(c.value.imag(), 1'000'000));
      bool seen = std::any_of(out.begin(), out.end(), [&](const ComponentRoot<T>& r) {
        return r.exact && r.value == candidate;
      });
      if (seen) continue;
      int multiplicity = 0;
      ComponentPolynomial<T> quotient;
      while (rest.size() >= 2 && detail::divide_linear(rest, candidate, quotient)) {
        rest = quotient;
        ++multiplicity;
      }
      if (multiplicity > 0) {
        out.push_back({candidate, multiplicity, true});
      } else {
        out.push_back({from_std<T>(c.value), c.multiplicity, false});
      }
    }
  }
  return out;
}

enum class RootKind { Finite, InfiniteFamily };

template <class E>
struct SolvedRoot {
  E value;
  std::vector<std::complex<double>> split;  // split components, for ordering
  int multiplicity = 1;
  bool exact = false;     // value is an exact root (exact backend only)
  double residual = 0.0;  // coefficient norm of p(value)
};

template <class E>
struct RootSet {
  using scalar_type = typename E::scalar_type;

  RootKind kind = RootKind::Finite;
  // Effective degree of each split component polynomial, -1 when it is
  // identically zero.
  std::vector<int> degrees;
  // Finite: all recombined roots, sorted by split components.
  std::vector<SolvedRoot<E>> roots;
  // InfiniteFamily: the free components, and the root lists of the
  // constrained ones (empty list for free components).
  std::vector<std::size_t> free_components;
  std::vector<std::vector<ComponentRoot<scalar_type>>> component_roots;

  std::size_t total_multiplicity() const {
    std::size_t n = 0;
    for (const auto& r : roots) n += static_cast<std::size_t>(r.multiplicity);
    return n;
  }
};

inline constexpr std::size_t kMaxRecombinedRoots = std::size_t{1} << 20;

namespace detail {

template <Scalar T>
Bicomplex<T> element_mul(const Bicomplex<T>& a, const Bicomplex<T>& b) { return bc_mul(a, b); }
template <Scalar T>
Bicomplex<T> element_add(const Bicomplex<T>& a, const Bicomplex<T>& b) { return bc_add(a, b); }
template <Scalar T>
Multicomplex<T> element_mul(const Multicomplex<T>& a, const Multicomplex<T>& b) { return mc_mul(a, b); }
template <Scalar T>
Multicomplex<T> element_add(const Multicomplex<T>& a, const Multicomplex<T>& b) { return mc_add(a, b); }

template <class E>
E evaluate(const std::vector<E>& p, const E& z) {
  E acc = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) acc = element_add(element_mul(acc, z), p[k]);
  return acc;
}

template <class E, class Recombine>
RootSet<E> solve_components(const std::vector<E>& p,
                            std::vector<ComponentPolynomial<typename E::scalar_type>> comps,
                            Recombine recombine) {
  using T = typename E::scalar_type;
  RootSet<E> set;
  bool all_zero = true;
  for (auto& c : comps) {
    c = trim(std::move(c));
    set.degrees.push_back(effective_degree(c));
    if (!c.empty()) all_zero = false;
  }
  if (all_zero) throw Error(ErrorKind::ZeroPolynomial, "polynomial is identically zero");

  // A nonzero constant component admits no solution at all.
  bool unsolvable = std::any_of(set.degrees.begin(), set.degrees.end(),
                                [](int d) { return d == 0; });
  if (unsolvable) return set;

  set.component_roots.resize(comps.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (comps[c].empty()) {
      set.free_components.push_back(c);
    } else {
      set.component_roots[c] = component_roots(comps[c]);
    }
  }
  if (!set.free_components.empty()) {
    set.kind = RootKind::InfiniteFamily;
    return set;
  }

  std::size_t count = 1;
  for (const auto& r : set.component_roots) {
    count *= r.size();
    if (count > kMaxRecombinedRoots) {
      throw Error(ErrorKind::InvalidArgument, "too many roots to enumerate");
    }
  }

  std::vector<std::size_t> pick(comps.size(), 0);
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Complex<T>> values;
    std::vector<std::complex<double>> split;
    int multiplicity = 1;
    bool exact = is_exact_v<T>;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& cr = set.component_roots[c][pick[c]];
      values.push_back(cr.value);
      split.push_back(to_std(cr.value));
      multiplicity *= cr.multiplicity;
      exact = exact && cr.exact;
    }
    SolvedRoot<E> root{recombine(values), std::move(split), multiplicity, exact, 0.0};
    E residual = evaluate(p, root.value);
    root.residual = coefficient_norm(residual);
    if (root.exact && !residual.is_zero()) {
      throw Error(ErrorKind::NoConvergence, "exact root failed substitution");
    }
    set.roots.push_back(std::move(root));

    for (std::size_t c = comps.size(); c-- > 0;) {
      if (++pick[c] < set.component_roots[c].size()) break;
      pick[c] = 0;
    }
  }

  std::sort(set.roots.begin(), set.roots.end(), [](const SolvedRoot<E>& a, const SolvedRoot<E>& b) {
    auto key = [](const SolvedRoot<E>& r) {
      std::vector<double> k;
      for (auto z : r.split) {
        k.push_back(z.real());
        k.push_back(z.imag());
      }
      return k;
    };
    return key(a) < key(b);
  });
  return set;
}

template <class E>
void require_nonempty(const std::vector<E>& p) {
  if (p.empty()) throw Error(ErrorKind::ZeroPolynomial, "polynomial has no coefficients");
}

}  // namespace detail

template <Scalar T>
RootSet<Bicomplex<T>> solve(const BicomplexPolynomial<T>& p) {
  detail::require_nonempty(p);
  std::vector<ComponentPolynomial<T>> comps(2);
  for (const auto& c : p) {
    SplitPair<T> d = bc_decompose(c);
    comps[0].push_back(d.z1);
    comps[1].push_back(d.z2);
  }
  return detail::solve_components(p, std::move(comps), [](const std::vector<Complex<T>>& v) {
    return bc_recompose(SplitPair<T>{v[0], v[1]});
  });
}

template <Scalar T>
RootSet<Multicomplex<T>> mc_solve(const MulticomplexPolynomial<T>& p) {
  detail::require_nonempty(p);
  const int order = p.front().order();
  std::vector<ComponentPolynomial<T>> comps(std::size_t{1} << (order - 1));
  for (const auto& c : p) {
    if (c.order() != order) {
      throw Error(ErrorKind::OrderMismatch, "coefficients have different orders");
    }
    SpectrumVector<T> s = mc_split(c);
    for (std::size_t k = 0; k < s.size(); ++k) comps[k].push_back(s[k]);
  }
  return detail::solve_components(p, std::move(comps), [order](const std::vector<Complex<T>>& v) {
    return mc_unsplit(order, v);
  });
}

}  // namespace tess
