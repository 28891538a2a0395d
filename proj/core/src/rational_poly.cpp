#include "tess/rational_poly.hpp"

#include <algorithm>

namespace tess {

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(Rational c) { return QPoly({std::move(c)}); }

QPoly QPoly::x() { return QPoly({Rational(0), Rational(1)}); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational QPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

double QPoly::operator()(double x) const {
  double acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + to_double(coeffs_[k]);
  return acc;
}

std::complex<double> QPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + to_double(coeffs_[k]);
  return acc;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = a.coeff(k) + b.coeff(k);
  return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return QPoly(std::move(r));
}

QPoly operator*(const Rational& s, const QPoly& a) {
  std::vector<Rational> r = a.coeffs_;
  for (auto& c : r) c *= s;
  return QPoly(std::move(r));
}

QPoly QPoly::operator-() const { return Rational(-1) * *this; }

QPoly QPoly::pow(unsigned n) const {
  QPoly r = constant(Rational(1));
  for (unsigned k = 0; k < n; ++k) r = r * *this;
  return r;
}

QPoly QPoly::primitive() const {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (is_zero()) return {};
  Integer lcm = 1;
  for (const auto& c : coeffs_) {
    Integer d = denominator(c);
    lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
  }
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer v = numerator(c) * (lcm / denominator(c));
    ints.push_back(v);
    g = boost::multiprecision::gcd(g, v);
  }
  if (g < 0) g = -g;
  if (ints.back() < 0) g = -g;
  std::vector<Rational> r;
  for (const auto& v : ints) r.emplace_back(v / g);
  return QPoly(std::move(r));
}

bool QPoly::divide_root(const Rational& r, QPoly& out) const {
  if (coeffs_.size() < 2) return false;
  const std::size_t n = coeffs_.size() - 1;
  std::vector<Rational> q(n);
  Rational carry = coeffs_[n];
  for (std::size_t k = n; k-- > 0;) {
    q[k] = carry;
    carry = coeffs_[k] + r * carry;
  }
  if (carry != 0) return false;
  out = QPoly(std::move(q));
  return true;
}

std::string QPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    std::string body;
    std::string power = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (k == 0) {
      body = tess::to_string(mag);
    } else if (mag == 1) {
      body = power;
    } else {
      body = tess::to_string(mag) + "*" + power;
    }
    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace tess
