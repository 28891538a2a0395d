#pragma once

// Radical ("surd") equations over Q[x]:
//
//   base(x) + sum_m sign_m * Q_m(x) * sqrt(R_m(x)) = 0.
//
// The congeners of an equation are the 2^n variants obtained by flipping the
// signs of its n radicals. Their product is radical-free: the stock
// polynomial. Every root of the stock polynomial makes at least one congener
// vanish, so solving the stock equation and testing each congener at each
// root shows which congeners are solvable and which are impossible.

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tess/rational_poly.hpp"
#include "tess/scalar.hpp"

namespace tess {

inline constexpr int kMaxRadicals = 4;
inline constexpr int kMaxRadicandDegree = 8;

struct SurdTerm {
  QPoly coefficient;  // leading coefficient positive
  QPoly radicand;
  int sign = 1;

  friend bool operator==(const SurdTerm&, const SurdTerm&) = default;
};

struct SurdEquation {
  QPoly base;
  std::vector<SurdTerm> terms;

  friend bool operator==(const SurdEquation&, const SurdEquation&) = default;
};

// Grammar (whitespace-insensitive):
//
//   equation := expr '=' expr
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor (('*'|'/') factor | factor)*
//   factor   := number | 'x' ['^' integer] | 'sqrt' '(' expr ')'
//             | '(' expr ')' ['^' integer]
//
// with at most one radical per term, divisors restricted to nonzero
// constants and radicals not nested. The right-hand side is moved to the
// left and terms sharing a radicand are merged. Throws SyntaxError (with
// position and expectation) or UnsupportedNesting; InvalidArgument when the
// equation has no radical or exceeds the radical-count or radicand-degree
// caps.
SurdEquation parse_surd(std::string_view text);

// "base + c*sqrt(R) - ... = 0", re-parseable to the same equation.
std::string to_string(const SurdEquation& eq);

// Bit m of `flips` flips the sign of radical m; index 0 is the input.
SurdEquation congener(const SurdEquation& eq, std::size_t flips);
std::vector<SurdEquation> congeners(const SurdEquation& eq);

// Exact product of all congeners, computed in Q[x, s_1..s_n]/(s_m^2 - R_m).
QPoly stock_product(const SurdEquation& eq);

// stock_product made primitive with positive leading coefficient.
QPoly stock_equation(const SurdEquation& eq);

enum class RootStatus { Assigned, Ambiguous };

struct StockRoot {
  std::complex<double> value;
  std::optional<Rational> exact;  // set for rational roots
  int multiplicity = 1;
  bool real = true;
  RootStatus status = RootStatus::Assigned;
  std::vector<std::size_t> congeners;  // indices of vanishing congeners
};

struct CongenerStatus {
  std::vector<int> signs;  // effective sign of each radical
  bool possible = false;
  std::vector<std::size_t> roots;  // indices into CongenerReport::roots
};

struct CongenerReport {
  SurdEquation equation;
  std::vector<CongenerStatus> congeners;
  QPoly stock;
  int degree = 0;
  std::string order;  // "m/N" with N the number of congeners, unreduced
  std::vector<StockRoot> roots;
};

// Throws DegenerateStock when the stock polynomial vanishes identically
// (every x satisfies some congener, e.g. sqrt(x^2) = x).
CongenerReport classify_roots(const SurdEquation& eq);

}  // namespace tess
