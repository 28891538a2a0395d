#include "tess/surd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "tess/error.hpp"
#include "tess/roots.hpp"

namespace tess {

namespace {

// base + sum coeff_m * sqrt(radicand_m), radicands kept in first-seen order.
struct SurdExpr {
  QPoly base;
  std::vector<std::pair<QPoly, QPoly>> radicals;  // (radicand, coefficient)

  bool has_radicals() const { return !radicals.empty(); }

  void add_radical(const QPoly& radicand, const QPoly& coeff) {
    for (auto& [r, c] : radicals) {
      if (r == radicand) {
        c = c + coeff;
        return;
      }
    }
    radicals.emplace_back(radicand, coeff);
  }

  friend SurdExpr operator+(SurdExpr a, const SurdExpr& b) {
    a.base = a.base + b.base;
    for (const auto& [r, c] : b.radicals) a.add_radical(r, c);
    return a;
  }

  SurdExpr negated() const {
    SurdExpr r;
    r.base = -base;
    for (const auto& [rad, c] : radicals) r.radicals.emplace_back(rad, -c);
    return r;
  }

  // Product where at most one side carries radicals.
  static SurdExpr times(const SurdExpr& a, const SurdExpr& b) {
    const SurdExpr& poly = a.has_radicals() ? b : a;
    const SurdExpr& other = a.has_radicals() ? a : b;
    SurdExpr r;
    r.base = poly.base * other.base;
    for (const auto& [rad, c] : other.radicals) r.radicals.emplace_back(rad, poly.base * c);
    return r;
  }
};

class SurdParser {
 public:
  explicit SurdParser(std::string_view text) : text_(text) {}

  SurdEquation parse() {
    SurdExpr lhs = expr(false);
    skip_ws();
    if (at_end() || peek() != '=') throw SyntaxError(pos_, "'=' or operator");
    ++pos_;
    SurdExpr rhs = expr(false);
    skip_ws();
    if (!at_end()) throw SyntaxError(pos_, "end of input");
    return normalize(lhs + rhs.negated());
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool starts_factor() const {
    if (at_end()) return false;
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  SurdExpr expr(bool inside_radical) {
    skip_ws();
    bool negative = false;
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      ++pos_;
    }
    SurdExpr acc = term(inside_radical);
    if (negative) acc = acc.negated();
    while (true) {
      skip_ws();
      if (at_end() || (peek() != '+' && peek() != '-')) break;
      bool minus = peek() == '-';
      ++pos_;
      SurdExpr t = term(inside_radical);
      acc = acc + (minus ? t.negated() : t);
    }
    return acc;
  }

  SurdExpr term(bool inside_radical) {
    SurdExpr acc = factor(inside_radical);
    while (true) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      std::size_t at = pos_;
      if (c == '*') {
        ++pos_;
        acc = multiply(acc, factor(inside_radical), at);
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        std::size_t divisor_at = pos_;
        SurdExpr d = factor(inside_radical);
        if (d.has_radicals() || !d.base.is_constant() || d.base.is_zero()) {
          throw SyntaxError(divisor_at, "nonzero constant divisor");
        }
        Rational inv = Rational(1) / d.base.leading();
        acc = multiply(acc, SurdExpr{QPoly::constant(inv), {}}, at);
      } else if (starts_factor()) {
        acc = multiply(acc, factor(inside_radical), at);
      } else {
        break;
      }
    }
    return acc;
  }

  SurdExpr multiply(const SurdExpr& a, const SurdExpr& b, std::size_t at) {
    if (a.has_radicals() && b.has_radicals()) {
      throw SyntaxError(at, "at most one radical per term");
    }
    return SurdExpr::times(a, b);
  }

  unsigned exponent() {
    skip_ws();
    std::size_t start = pos_;
    unsigned value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<unsigned>(peek() - '0');
      if (value > 64) throw SyntaxError(start, "exponent at most 64");
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError(pos_, "nonnegative integer exponent");
    return value;
  }

  SurdExpr maybe_power(SurdExpr base) {
    skip_ws();
    if (at_end() || peek() != '^') return base;
    std::size_t at = pos_;
    ++pos_;
    unsigned n = exponent();
    if (base.has_radicals()) throw SyntaxError(at, "no powers of radicals");
    return SurdExpr{base.base.pow(n), {}};
  }

  SurdExpr factor(bool inside_radical) {
    skip_ws();
    if (at_end()) throw SyntaxError(pos_, "number, 'x', 'sqrt' or '('");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
      Rational v;
      try {
        v = parse_rational(text_.substr(start, pos_ - start));
      } catch (const SyntaxError& e) {
        throw SyntaxError(start + e.position(), e.expected());
      }
      return SurdExpr{QPoly::constant(v), {}};
    }
    if (c == '(') {
      ++pos_;
      SurdExpr inner = expr(inside_radical);
      skip_ws();
      if (at_end() || peek() != ')') throw SyntaxError(pos_, "')'");
      ++pos_;
      return maybe_power(std::move(inner));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return maybe_power(SurdExpr{QPoly::x(), {}});
      if (name == "sqrt") {
        if (inside_radical) {
          throw SyntaxError(start, "no radical inside a radical", ErrorKind::UnsupportedNesting);
        }
        skip_ws();
        if (at_end() || peek() != '(') throw SyntaxError(pos_, "'(' after sqrt");
        ++pos_;
        SurdExpr arg = expr(true);
        skip_ws();
        if (at_end() || peek() != ')') throw SyntaxError(pos_, "')'");
        ++pos_;
        SurdExpr r;
        if (!arg.base.is_zero()) r.radicals.emplace_back(arg.base, QPoly::constant(Rational(1)));
        skip_ws();
        if (!at_end() && peek() == '^') throw SyntaxError(pos_, "no powers of radicals");
        return r;
      }
      throw SyntaxError(start, "'x' or 'sqrt'");
    }
    throw SyntaxError(pos_, "number, 'x', 'sqrt' or '('");
  }

  static SurdEquation normalize(const SurdExpr& e) {
    SurdEquation eq;
    eq.base = e.base;
    for (const auto& [rad, coeff] : e.radicals) {
      if (coeff.is_zero()) continue;
      SurdTerm t;
      t.sign = coeff.leading() < 0 ? -1 : 1;
      t.coefficient = t.sign < 0 ? -coeff : coeff;
      t.radicand = rad;
      if (rad.degree() > kMaxRadicandDegree) {
        throw Error(ErrorKind::InvalidArgument,
                    "radicand degree exceeds " + std::to_string(kMaxRadicandDegree));
      }
      eq.terms.push_back(std::move(t));
    }
    if (eq.terms.empty()) throw Error(ErrorKind::InvalidArgument, "equation has no radical");
    if (eq.terms.size() > static_cast<std::size_t>(kMaxRadicals)) {
      throw Error(ErrorKind::InvalidArgument,
                  "at most " + std::to_string(kMaxRadicals) + " distinct radicals");
    }
    return eq;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int effective_sign(const SurdEquation& eq, std::size_t flips, std::size_t m) {
  return ((flips >> m) & 1U) ? -eq.terms[m].sign : eq.terms[m].sign;
}

using RingElement = std::vector<QPoly>;  // indexed by radical-monomial mask

RingElement ring_mul(const RingElement& a, const RingElement& b,
                     const std::vector<QPoly>& radicand_products) {
  RingElement r(a.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (a[s].is_zero()) continue;
    for (std::size_t t = 0; t < b.size(); ++t) {
      if (b[t].is_zero()) continue;
      r[s ^ t] = r[s ^ t] + a[s] * b[t] * radicand_products[s & t];
    }
  }
  return r;
}

// Divisors of |n| up to a cap; empty when |n| is too large to enumerate.
std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  if (n > Integer(1'000'000'000'000LL)) return {};
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<std::size_t> vanishing_congeners(const SurdEquation& eq, const StockRoot& root,
                                             std::vector<bool>& negative_radicand) {
  const std::size_t n = eq.terms.size();
  const std::size_t count = std::size_t{1} << n;
  negative_radicand.assign(n, false);
  std::vector<std::size_t> out;

  if (root.exact) {
    const Rational& r = *root.exact;
    std::vector<Rational> term_values(n);
    bool all_exact = true;
    for (std::size_t m = 0; m < n; ++m) {
      Rational rad = eq.terms[m].radicand(r);
      negative_radicand[m] = rad < 0;
      Rational s;
      if (!exact_sqrt(rad, s)) {
        all_exact = false;
        continue;
      }
      term_values[m] = eq.terms[m].coefficient(r) * s;
    }
    if (all_exact) {
      Rational b = eq.base(r);
      for (std::size_t f = 0; f < count; ++f) {
        Rational v = b;
        for (std::size_t m = 0; m < n; ++m) v += effective_sign(eq, f, m) * term_values[m];
        if (v == 0) out.push_back(f);
      }
      return out;
    }
  }

  const double x = root.value.real();
  std::vector<std::complex<double>> t(n);
  double b = eq.base(x);
  double scale = 1.0 + std::abs(b);
  for (std::size_t m = 0; m < n; ++m) {
    double rad = eq.terms[m].radicand(x);
    if (!root.exact) negative_radicand[m] = rad < 0;
    t[m] = eq.terms[m].coefficient(x) * std::sqrt(std::complex<double>(rad, 0.0));
    scale += std::abs(t[m]);
  }
  for (std::size_t f = 0; f < count; ++f) {
    std::complex<double> v = b;
    for (std::size_t m = 0; m < n; ++m) v += static_cast<double>(effective_sign(eq, f, m)) * t[m];
    if (std::abs(v) <= 1e-8 * scale) out.push_back(f);
  }
  return out;
}

}  // namespace

SurdEquation parse_surd(std::string_view text) { return SurdParser(text).parse(); }

std::string to_string(const SurdEquation& eq) {
  std::string out = eq.base.is_zero() ? "" : eq.base.to_string();
  for (const auto& t : eq.terms) {
    std::string body;
    if (t.coefficient == QPoly::constant(Rational(1))) {
      body = "sqrt(" + t.radicand.to_string() + ")";
    } else if (t.coefficient.is_constant()) {
      body = tess::to_string(t.coefficient.leading()) + "*sqrt(" + t.radicand.to_string() + ")";
    } else {
      body = "(" + t.coefficient.to_string() + ")*sqrt(" + t.radicand.to_string() + ")";
    }
    if (out.empty()) {
      out = t.sign < 0 ? "-" + body : body;
    } else {
      out += t.sign < 0 ? " - " : " + ";
      out += body;
    }
  }
  return out + " = 0";
}

SurdEquation congener(const SurdEquation& eq, std::size_t flips) {
  SurdEquation c = eq;
  for (std::size_t m = 0; m < c.terms.size(); ++m) c.terms[m].sign = effective_sign(eq, flips, m);
  return c;
}

std::vector<SurdEquation> congeners(const SurdEquation& eq) {
  std::vector<SurdEquation> out;
  const std::size_t count = std::size_t{1} << eq.terms.size();
  for (std::size_t f = 0; f < count; ++f) out.push_back(congener(eq, f));
  return out;
}

QPoly stock_product(const SurdEquation& eq) {
  const std::size_t n = eq.terms.size();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<QPoly> radicand_products(dim, QPoly::constant(Rational(1)));
  for (std::size_t s = 0; s < dim; ++s) {
    for (std::size_t m = 0; m < n; ++m) {
      if ((s >> m) & 1U) radicand_products[s] = radicand_products[s] * eq.terms[m].radicand;
    }
  }
  RingElement acc(dim);
  acc[0] = QPoly::constant(Rational(1));
  for (std::size_t f = 0; f < dim; ++f) {
    RingElement factor(dim);
    factor[0] = eq.base;
    for (std::size_t m = 0; m < n; ++m) {
      factor[std::size_t{1} << m] = Rational(effective_sign(eq, f, m)) * eq.terms[m].coefficient;
    }
    acc = ring_mul(acc, factor, radicand_products);
  }
  for (std::size_t s = 1; s < dim; ++s) {
    if (!acc[s].is_zero()) {
      throw Error(ErrorKind::InvalidArgument, "internal: congener product kept a radical");
    }
  }
  return acc[0];
}

QPoly stock_equation(const SurdEquation& eq) { return stock_product(eq).primitive(); }

CongenerReport classify_roots(const SurdEquation& eq) {
  CongenerReport report;
  report.equation = eq;
  report.stock = stock_equation(eq);
  if (report.stock.is_zero()) {
    throw Error(ErrorKind::DegenerateStock,
                "stock polynomial vanishes identically; every x satisfies some congener");
  }
  report.degree = report.stock.degree();
  const std::size_t count = std::size_t{1} << eq.terms.size();
  report.order = std::to_string(report.degree) + "/" + std::to_string(count);

  // Exact rational roots first, deflating as they are found.
  QPoly rest = report.stock;
  auto add_exact = [&](const Rational& r) {
    StockRoot root;
    root.exact = r;
    root.value = to_double(r);
    root.multiplicity = 0;
    QPoly q;
    while (rest.divide_root(r, q)) {
      rest = q.primitive();
      ++root.multiplicity;
    }
    report.roots.push_back(root);
  };
  if (rest.degree() >= 1 && rest.coeff(0) == 0) add_exact(Rational(0));
  bool found = true;
  while (found && rest.degree() >= 1) {
    found = false;
    ComplexPolynomial q;
    for (const auto& c : rest.coeffs()) q.emplace_back(to_double(c), 0.0);
    for (std::complex<double> z : complex_roots(q)) {
      if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z))) continue;
      std::vector<Integer> dens = positive_divisors(boost::multiprecision::numerator(rest.leading()));
      std::vector<Rational> candidates;
      for (const auto& d : dens) {
        double scaled = z.real() * d.convert_to<double>();
        candidates.emplace_back(Integer(static_cast<long long>(std::llround(scaled))), d);
      }
      if (dens.empty()) candidates.push_back(best_rational(z.real(), 1'000'000));
      for (const auto& c : candidates) {
        if (rest(c) == 0) {
          add_exact(c);
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }
  if (rest.degree() >= 1) {
    ComplexPolynomial q;
    for (const auto& c : rest.coeffs()) q.emplace_back(to_double(c), 0.0);
    auto raw = complex_roots(q);
    for (const auto& cl : cluster_roots(raw, 1e-7 * root_scale(raw))) {
      StockRoot root;
      root.value = cl.value;
      root.multiplicity = cl.multiplicity;
      root.real = std::abs(cl.value.imag()) <= 1e-8 * (1.0 + std::abs(cl.value));
      if (root.real) root.value = {cl.value.real(), 0.0};
      report.roots.push_back(root);
    }
  }

  std::sort(report.roots.begin(), report.roots.end(), [](const StockRoot& a, const StockRoot& b) {
    if (a.real != b.real) return a.real;
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });

  for (auto& root : report.roots) {
    if (!root.real) {
      root.status = RootStatus::Ambiguous;
      continue;
    }
    std::vector<bool> negative;
    std::vector<std::size_t> v = vanishing_congeners(eq, root, negative);
    bool ambiguous = v.empty();
    for (std::size_t m = 0; m < negative.size() && !ambiguous; ++m) {
      if (!negative[m]) continue;
      for (std::size_t f : v) {
        if (std::find(v.begin(), v.end(), f ^ (std::size_t{1} << m)) == v.end()) {
          ambiguous = true;
          break;
        }
      }
    }
    root.status = ambiguous ? RootStatus::Ambiguous : RootStatus::Assigned;
    if (!ambiguous) root.congeners = v;
  }

  for (std::size_t f = 0; f < count; ++f) {
    CongenerStatus status;
    for (std::size_t m = 0; m < eq.terms.size(); ++m) status.signs.push_back(effective_sign(eq, f, m));
    for (std::size_t r = 0; r < report.roots.size(); ++r) {
      const auto& cg = report.roots[r].congeners;
      if (std::find(cg.begin(), cg.end(), f) != cg.end()) status.roots.push_back(r);
    }
    status.possible = !status.roots.empty();
    report.congeners.push_back(std::move(status));
  }
  return report;
}

}  // namespace tess
