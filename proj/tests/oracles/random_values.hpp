#pragma once

#include <random>

#include "tess/bicomplex.hpp"
#include "tess/multicomplex.hpp"
#include "tess/scalar.hpp"

namespace oracle {

using tess::Rational;

class RandomRationals {
 public:
  explicit RandomRationals(unsigned long long seed) : rng_(seed) {}

  // p/q with |p| <= 20, 1 <= q <= 9.
  Rational next() {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 9);
    return Rational(num(rng_), den(rng_));
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  tess::Bicomplex<Rational> bicomplex() { return {next(), next(), next(), next()}; }

  tess::Multicomplex<Rational> multicomplex(int order) {
    std::vector<Rational> c;
    for (std::size_t k = 0; k < tess::Multicomplex<Rational>::dim_of(order); ++k) c.push_back(next());
    return tess::Multicomplex<Rational>(order, c);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
