#include <benchmark/benchmark.h>

#include <random>

#include "tess/bicomplex.hpp"
#include "tess/biquaternion.hpp"
#include "tess/multicomplex.hpp"
#include "tess/polysolve.hpp"
#include "tess/quadruple.hpp"
#include "tess/roots.hpp"
#include "tess/surd.hpp"

namespace {

using tess::Rational;

tess::Bicomplex<Rational> sample_bicomplex(int seed) {
  return {Rational(seed, 3), Rational(-2 * seed, 5), Rational(7, seed + 1), Rational(seed - 4, 9)};
}

void BM_BicomplexMulExact(benchmark::State& state) {
  auto a = sample_bicomplex(1), b = sample_bicomplex(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BicomplexMulExact);

void BM_BicomplexMulDouble(benchmark::State& state) {
  tess::Bicomplex<double> a{1.5, -0.25, 2.0, 0.75}, b{-1.0, 0.5, 0.125, 3.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(b);
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_BicomplexMulDouble);

void BM_BicomplexDecompose(benchmark::State& state) {
  auto a = sample_bicomplex(3);
  for (auto _ : state) benchmark::DoNotOptimize(tess::bc_decompose(a));
}
BENCHMARK(BM_BicomplexDecompose);

void BM_MulticomplexMul(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> ca(tess::Multicomplex<double>::dim_of(order)), cb(ca.size());
  for (auto& c : ca) c = u(rng);
  for (auto& c : cb) c = u(rng);
  tess::Multicomplex<double> a(order, ca), b(order, cb);
  for (auto _ : state) benchmark::DoNotOptimize(tess::mc_mul(a, b));
}
BENCHMARK(BM_MulticomplexMul)->DenseRange(2, 8, 2);

void BM_MulticomplexSplit(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  std::vector<double> c(tess::Multicomplex<double>::dim_of(order), 0.5);
  tess::Multicomplex<double> a(order, c);
  for (auto _ : state) benchmark::DoNotOptimize(tess::mc_split(a));
}
BENCHMARK(BM_MulticomplexSplit)->DenseRange(2, 8, 2);

void BM_DeriveTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tess::derive_table({-1, 1}));
}
BENCHMARK(BM_DeriveTable);

void BM_ComplexRoots(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  tess::ComplexPolynomial q(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& c : q) c = {u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(tess::complex_roots(q));
}
BENCHMARK(BM_ComplexRoots)->RangeMultiplier(2)->Range(2, 32);

void BM_BicomplexSolve(benchmark::State& state) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<tess::Bicomplex<double>> p(static_cast<std::size_t>(state.range(0)) + 1);
  for (auto& c : p) c = {u(rng), u(rng), u(rng), u(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(tess::solve(p));
}
BENCHMARK(BM_BicomplexSolve)->RangeMultiplier(2)->Range(2, 16);

void BM_StockEquation(benchmark::State& state) {
  const char* text[] = {"2*x + sqrt(x^2-7) = 5", "sqrt(x) + sqrt(x + 1) = 1",
                        "sqrt(x) + sqrt(x + 1) + sqrt(x + 2) = 3",
                        "sqrt(x) + sqrt(x + 1) + sqrt(x + 2) + sqrt(2*x^2 + 3) = 4"};
  auto eq = tess::parse_surd(text[state.range(0) - 1]);
  for (auto _ : state) benchmark::DoNotOptimize(tess::stock_equation(eq));
}
BENCHMARK(BM_StockEquation)->DenseRange(1, 4);

void BM_ClassifyRoots(benchmark::State& state) {
  auto eq = tess::parse_surd("sqrt(x) + sqrt(x + 1) + sqrt(x + 2) = 3");
  for (auto _ : state) benchmark::DoNotOptimize(tess::classify_roots(eq));
}
BENCHMARK(BM_ClassifyRoots);

void BM_BiquaternionSolveQuadratic(benchmark::State& state) {
  tess::Biquaternion<double> b, c;
  b.c[1] = {1.0, 0.0};
  c.c[2] = {1.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(tess::bq_solve_quadratic(b, c));
}
BENCHMARK(BM_BiquaternionSolveQuadratic);

}  // namespace

BENCHMARK_MAIN();
