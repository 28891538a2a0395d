#include "tess/roots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tess/error.hpp"

namespace tess {

using cd = std::complex<double>;

namespace {

// p(z) and p'(z) by Horner.
std::pair<cd, cd> eval_with_derivative(const ComplexPolynomial& q, cd z) {
  cd p = q.back();
  cd dp = 0.0;
  for (std::size_t k = q.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + q[k];
  }
  return {p, dp};
}

double worst_residual(const ComplexPolynomial& q, const std::vector<cd>& roots) {
  double worst = 0.0;
  for (cd r : roots) {
    double scale = evaluation_scale(q, r);
    double res = std::abs(evaluate(q, r));
    worst = std::max(worst, scale > 0 ? res / scale : res);
  }
  return worst;
}

bool aberth(const ComplexPolynomial& q, std::vector<cd>& z, int max_iterations,
            int& iterations) {
  const std::size_t n = q.size() - 1;
  const cd lead = q.back();
  double cauchy = 0.0;
  for (std::size_t k = 0; k < n; ++k) cauchy = std::max(cauchy, std::abs(q[k] / lead));
  cauchy += 1.0;

  z.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    // Slight radial perturbation breaks symmetric stalls.
    double radius = cauchy * (1.0 + 0.01 * static_cast<double>(k % 3));
    z[k] = std::polar(radius, angle);
  }

  std::vector<bool> done(n, false);
  for (iterations = 1; iterations <= max_iterations; ++iterations) {
    bool all_done = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (done[k]) continue;
      auto [p, dp] = eval_with_derivative(q, z[k]);
      if (p == cd(0.0)) {
        done[k] = true;
        continue;
      }
      cd sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) {
          cd d = z[k] - z[j];
          if (d != cd(0.0)) sum += 1.0 / d;
        }
      }
      cd ratio = (dp == cd(0.0)) ? cd(1e-3, 1e-3) : p / dp;
      cd step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) step = ratio;
      z[k] -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) return true;
  }
  return false;
}

std::vector<cd> companion_roots(const ComplexPolynomial& q) {
  const Eigen::Index n = static_cast<Eigen::Index>(q.size() - 1);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index r = 1; r < n; ++r) c(r, r - 1) = 1.0;
  for (Eigen::Index r = 0; r < n; ++r) c(r, n - 1) = -q[static_cast<std::size_t>(r)] / q.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
  std::vector<cd> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  for (cd& r : out) {
    for (int it = 0; it < 50; ++it) {
      auto [p, dp] = eval_with_derivative(q, r);
      if (p == cd(0.0) || dp == cd(0.0)) break;
      cd next = r - p / dp;
      if (std::abs(evaluate(q, next)) >= std::abs(p)) break;
      r = next;
    }
  }
  return out;
}

}  // namespace

cd evaluate(const ComplexPolynomial& q, cd z) {
  cd p = 0.0;
  for (std::size_t k = q.size(); k-- > 0;) p = p * z + q[k];
  return p;
}

double evaluation_scale(const ComplexPolynomial& q, cd z) {
  double s = 0.0, zk = 1.0, az = std::abs(z);
  for (const cd& a : q) {
    s += std::abs(a) * zk;
    zk *= az;
  }
  return s;
}

std::vector<cd> complex_roots(const ComplexPolynomial& q, const RootFinderOptions& options,
                              RootFinderDiagnostics* diagnostics) {
  if (q.size() < 2 || q.back() == cd(0.0)) {
    throw Error(ErrorKind::InvalidArgument,
                "root finding needs degree >= 1 with a nonzero leading coefficient");
  }
  RootFinderDiagnostics diag;
  std::vector<cd> roots;
  std::size_t zeros = 0;
  while (q[zeros] == cd(0.0)) ++zeros;
  roots.assign(zeros, cd(0.0));
  ComplexPolynomial reduced(q.begin() + static_cast<std::ptrdiff_t>(zeros), q.end());

  if (reduced.size() == 2) {
    roots.push_back(-reduced[0] / reduced[1]);
  } else if (reduced.size() > 2) {
    std::vector<cd> z;
    bool converged = aberth(reduced, z, options.max_iterations, diag.iterations);
    double worst = worst_residual(reduced, z);
    if (!converged || worst > options.residual_tolerance) {
      diag.used_companion_fallback = true;
      std::vector<cd> alt = companion_roots(reduced);
      double alt_worst = worst_residual(reduced, alt);
      if (alt_worst < worst) {
        z = std::move(alt);
        worst = alt_worst;
      }
    }
    diag.worst_relative_residual = worst;
    if (worst > options.residual_tolerance) {
      if (diagnostics) *diagnostics = diag;
      std::ostringstream msg;
      msg << "root finder did not converge: degree " << reduced.size() - 1 << ", "
          << diag.iterations << " Aberth iterations, companion fallback used, "
          << "worst relative residual " << worst;
      throw Error(ErrorKind::NoConvergence, msg.str());
    }
    roots.insert(roots.end(), z.begin(), z.end());
  }
  if (diagnostics) *diagnostics = diag;
  return roots;
}

std::vector<RootCluster> cluster_roots(const std::vector<cd>& roots, double radius) {
  std::vector<RootCluster> clusters;
  std::vector<cd> sums;
  for (cd r : roots) {
    bool merged = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(clusters[c].value - r) <= radius) {
        sums[c] += r;
        ++clusters[c].multiplicity;
        clusters[c].value = sums[c] / static_cast<double>(clusters[c].multiplicity);
        merged = true;
        break;
      }
    }
    if (!merged) {
      clusters.push_back({r, 1});
      sums.push_back(r);
    }
  }
  return clusters;
}

double root_scale(const std::vector<cd>& roots) {
  double s = 1.0;
  for (cd r : roots) s = std::max(s, std::abs(r));
  return s;
}

}  // namespace tess
