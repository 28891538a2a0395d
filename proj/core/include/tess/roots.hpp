#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace tess {

// Coefficients in ascending degree order.
using ComplexPolynomial = std::vector<std::complex<double>>;

std::complex<double> evaluate(const ComplexPolynomial& q, std::complex<double> z);

// Sum |a_k| |z|^k, the natural backward-error scale for a residual at z.
double evaluation_scale(const ComplexPolynomial& q, std::complex<double> z);

struct RootFinderOptions {
  int max_iterations = 500;
  double residual_tolerance = 1e-10;  // relative to evaluation_scale
};

struct RootFinderDiagnostics {
  int iterations = 0;
  bool used_companion_fallback = false;
  double worst_relative_residual = 0.0;
};

// All deg(q) roots with multiplicity. Requires deg >= 1 and a nonzero leading
// coefficient (InvalidArgument otherwise). Exact zero roots (vanishing low
// coefficients) are returned as exact zeros. Aberth-Ehrlich iteration from a
// perturbed circle at the Cauchy bound; if that fails to converge or leaves a
// residual above tolerance the companion-matrix eigenvalues are used and
// Newton-polished. Throws NoConvergence with the diagnostics in the message
// when neither route meets the tolerance.
std::vector<std::complex<double>> complex_roots(const ComplexPolynomial& q,
                                                const RootFinderOptions& options = {},
                                                RootFinderDiagnostics* diagnostics = nullptr);

struct RootCluster {
  std::complex<double> value;
  int multiplicity = 1;
};

// Merges roots closer than radius into clusters (mean value, summed
// multiplicity). Deterministic for a given input order.
std::vector<RootCluster> cluster_roots(const std::vector<std::complex<double>>& roots,
                                       double radius);

// Largest root modulus bound max(1, max |r|), used to scale clustering radii.
double root_scale(const std::vector<std::complex<double>>& roots);

}  // namespace tess
