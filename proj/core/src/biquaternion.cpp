#include "tess/biquaternion.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <sstream>

#include "tess/linear_text.hpp"

namespace tess {

namespace {

template <Scalar T>
std::string format_coefficient(const Complex<T>& z) {
  if (z.im == T(0)) return format_scalar(z.re);
  return "(" + format_scalar(z.re) + "," + format_scalar(z.im) + ")";
}

template <Scalar T>
std::string format_impl(const Biquaternion<T>& q) {
  std::vector<std::string> coeffs;
  for (const auto& z : q.c) coeffs.push_back(format_coefficient(z));
  return format_combination(coeffs, {"", "i", "j", "k"});
}

using Mat2 = Eigen::Matrix2cd;

Mat2 to_eigen(const MatrixImage<double>& m) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r(i, j) = to_std(m[i][j]);
  }
  return r;
}

MatrixImage<double> from_eigen(const Mat2& m) {
  MatrixImage<double> r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r[i][j] = Complex<double>(m(i, j).real(), m(i, j).imag());
  }
  return r;
}

double matrix_residual(const Mat2& x, const Mat2& b, const Mat2& c) {
  return (x * x - x * b - c).norm();
}

// Newton steps on X^2 - X B - C = 0; the derivative is
// dX -> X dX + dX X - dX B, a linear map on the 4 entries of dX.
Mat2 polish(Mat2 x, const Mat2& b, const Mat2& c) {
  for (int iter = 0; iter < 4; ++iter) {
    Mat2 f = x * x - x * b - c;
    double before = f.norm();
    if (before == 0.0) break;
    Eigen::Matrix4cd jac;
    for (int e = 0; e < 4; ++e) {
      Mat2 d = Mat2::Zero();
      d(e / 2, e % 2) = 1.0;
      Mat2 img = x * d + d * x - d * b;
      for (int r = 0; r < 4; ++r) jac(r, e) = img(r / 2, r % 2);
    }
    Eigen::Vector4cd rhs;
    for (int r = 0; r < 4; ++r) rhs(r) = -f(r / 2, r % 2);
    Eigen::Vector4cd step = jac.fullPivLu().solve(rhs);
    Mat2 next = x;
    for (int r = 0; r < 4; ++r) next(r / 2, r % 2) += step(r);
    if (matrix_residual(next, b, c) >= before) break;
    x = next;
  }
  return x;
}

}  // namespace

std::string format_biquaternion(const Biquaternion<double>& q) { return format_impl(q); }
std::string format_biquaternion(const Biquaternion<Rational>& q) { return format_impl(q); }

Biquaternion<Rational> parse_biquaternion(std::string_view text) {
  static const CombinationSyntax syntax{{"i", "j", "k"}, true, {"w", "omega"}};
  auto c = parse_combination(text, syntax);
  Biquaternion<Rational> q;
  for (int n = 0; n < 4; ++n) q.c[n] = c[n];
  return q;
}

QuadraticSolveResult bq_solve_quadratic(const Biquaternion<double>& b,
                                        const Biquaternion<double>& c) {
  const Mat2 B = to_eigen(bq_to_matrix(b));
  const Mat2 C = to_eigen(bq_to_matrix(c));

  Eigen::Matrix4cd companion = Eigen::Matrix4cd::Zero();
  companion.block<2, 2>(0, 2) = Mat2::Identity();
  companion.block<2, 2>(2, 0) = C.transpose();
  companion.block<2, 2>(2, 2) = B.transpose();

  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(companion);
  const Eigen::Vector4cd lambda = solver.eigenvalues();
  const Eigen::Matrix4cd vectors = solver.eigenvectors();

  QuadraticSolveResult result;
  double scale = 1.0;
  for (int n = 0; n < 4; ++n) {
    result.eigenvalues.push_back(lambda(n));
    scale = std::max(scale, std::abs(lambda(n)));
  }
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      if (std::abs(lambda(p) - lambda(q)) <= 1e-7 * scale) {
        std::ostringstream msg;
        msg << "repeated companion eigenvalue " << lambda(p)
            << "; solutions are not isolated";
        throw Error(ErrorKind::DegenerateSpectrum, msg.str());
      }
    }
  }

  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) {
      Mat2 v;
      v.col(0) = vectors.col(p).head<2>();
      v.col(1) = vectors.col(q).head<2>();
      double independence = std::abs(v.determinant()) / (v.col(0).norm() * v.col(1).norm());
      if (!(independence > 1e-10)) continue;
      Mat2 y = v * Eigen::Vector2cd(lambda(p), lambda(q)).asDiagonal() * v.inverse();
      Mat2 x = polish(y.transpose(), B, C);

      QuadraticSolution s;
      s.q = bq_from_matrix(from_eigen(x));
      double qn = coefficient_norm(s.q);
      // Round-off noise on vanishing parts.
      for (auto& z : s.q.c) {
        if (std::abs(z.re) <= 1e-14 * (1.0 + qn)) z.re = 0.0;
        if (std::abs(z.im) <= 1e-14 * (1.0 + qn)) z.im = 0.0;
      }
      s.real_quaternion = std::all_of(s.q.c.begin(), s.q.c.end(), [&](const Complex<double>& z) {
        return std::abs(z.im) <= 1e-9 * (1.0 + qn);
      });
      if (s.real_quaternion) {
        for (auto& z : s.q.c) z.im = 0.0;
      }
      Biquaternion<double> f = bq_sub(bq_sub(bq_mul(s.q, s.q), bq_mul(s.q, b)), c);
      s.residual = coefficient_norm(f);

      bool duplicate = std::any_of(result.solutions.begin(), result.solutions.end(),
                                   [&](const QuadraticSolution& o) {
                                     double r = 1e-7 * std::max({1.0, qn, coefficient_norm(o.q)});
                                     return coefficient_norm(bq_sub(o.q, s.q)) <= r;
                                   });
      if (!duplicate) result.solutions.push_back(s);
    }
  }
  // Deterministic order: real quaternions first, then by coefficients.
  std::sort(result.solutions.begin(), result.solutions.end(),
            [](const QuadraticSolution& a, const QuadraticSolution& b) {
              if (a.real_quaternion != b.real_quaternion) return a.real_quaternion;
              for (int n = 0; n < 4; ++n) {
                if (a.q.c[n].re != b.q.c[n].re) return a.q.c[n].re < b.q.c[n].re;
                if (a.q.c[n].im != b.q.c[n].im) return a.q.c[n].im < b.q.c[n].im;
              }
              return false;
            });
  return result;
}

}  // namespace tess
