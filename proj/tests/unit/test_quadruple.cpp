#include <doctest.h>

#include <memory>

#include "../oracles/algebra_oracles.hpp"
#include "../oracles/random_values.hpp"
#include "tess/bicomplex.hpp"
#include "tess/error.hpp"
#include "tess/quadruple.hpp"

using tess::CayleyTable;
using tess::QuadSystem;
using tess::Rational;
using tess::SignedUnit;

namespace {

constexpr int kOne = 0, kA = 1, kB = 2, kC = 3;

SignedUnit su(int sign, int index) { return SignedUnit{sign, index}; }

std::shared_ptr<const CayleyTable> table_ptr(QuadSystem s) {
  return std::make_shared<const CayleyTable>(tess::system_table(s));
}

tess::QuadElement<Rational> element(const std::shared_ptr<const CayleyTable>& t, Rational w,
                                    Rational x, Rational y, Rational z) {
  return tess::quad_element(t, w, x, y, z);
}

// Left-multiplication matrix assembled from products with basis elements.
std::vector<std::vector<Rational>> left_matrix(const tess::QuadElement<Rational>& u) {
  std::vector<std::vector<Rational>> m(4, std::vector<Rational>(4));
  for (int q = 0; q < 4; ++q) {
    std::array<Rational, 4> e{};
    e[static_cast<std::size_t>(q)] = 1;
    auto col = tess::quad_mul(u, tess::quad_element(u.table, e[0], e[1], e[2], e[3]));
    for (int r = 0; r < 4; ++r) m[r][q] = col.c[static_cast<std::size_t>(r)];
  }
  return m;
}

}  // namespace

TEST_CASE("every derived table is associative with unit row and ab = c") {
  for (int sa : {-1, 1}) {
    for (int sb : {-1, 1}) {
      auto tables = tess::derive_table({sa, sb});
      REQUIRE(tables.size() == 2);
      int normal = 0;
      for (const auto& t : tables) {
        CHECK(tess::is_associative(t));
        CHECK(t(kA, kB) == su(1, kC));
        CHECK(t(kA, kA) == su(sa, kOne));
        CHECK(t(kB, kB) == su(sb, kOne));
        for (int u = 0; u < 4; ++u) {
          CHECK(t(kOne, u) == su(1, u));
          CHECK(t(u, kOne) == su(1, u));
        }
        normal += tess::is_normal(t) ? 1 : 0;
      }
      CHECK(normal == 1);
      CHECK(tess::is_normal(tables.front()));
    }
  }
}

TEST_CASE("unsupported squares are rejected") {
  CHECK_THROWS_AS(tess::derive_table({2, 1}), tess::Error);
}

TEST_CASE("quaternion table: ji = -k, kj = -i, ik = -j") {
  CayleyTable t = tess::system_table(QuadSystem::Quaternion);
  CHECK(t(kA, kB) == su(1, kC));
  CHECK(t(kB, kC) == su(1, kA));
  CHECK(t(kC, kA) == su(1, kB));
  CHECK(t(kB, kA) == su(-1, kC));
  CHECK(t(kC, kB) == su(-1, kA));
  CHECK(t(kA, kC) == su(-1, kB));
  CHECK(t(kC, kC) == su(-1, kOne));
  CHECK_FALSE(tess::is_normal(t));
}

TEST_CASE("tessarine table is commutative: ij = k, jk = i, ki = -j") {
  CayleyTable t = tess::system_table(QuadSystem::Tessarine);
  CHECK(tess::is_normal(t));
  CHECK(t(kA, kB) == su(1, kC));
  CHECK(t(kB, kC) == su(1, kA));
  CHECK(t(kC, kA) == su(-1, kB));
  CHECK(t(kB, kB) == su(1, kOne));
  CHECK(t(kC, kC) == su(-1, kOne));
}

TEST_CASE("coquaternion table: ac = -b, bc = -a, ba = -c, ca = b, cb = a") {
  CayleyTable t = tess::system_table(QuadSystem::Coquaternion);
  CHECK(t(kA, kC) == su(-1, kB));
  CHECK(t(kB, kC) == su(-1, kA));
  CHECK(t(kB, kA) == su(-1, kC));
  CHECK(t(kC, kA) == su(1, kB));
  CHECK(t(kC, kB) == su(1, kA));
  CHECK(t(kA, kA) == su(-1, kOne));
  CHECK(t(kB, kB) == su(1, kOne));
  CHECK(t(kC, kC) == su(1, kOne));
  CHECK_FALSE(tess::is_normal(t));
}

TEST_CASE("cotessarine table: de = f = ed, df = e = fd, ef = d = fe") {
  CayleyTable t = tess::system_table(QuadSystem::Cotessarine);
  CHECK(t(kA, kB) == su(1, kC));
  CHECK(t(kB, kA) == su(1, kC));
  CHECK(t(kA, kC) == su(1, kB));
  CHECK(t(kC, kA) == su(1, kB));
  CHECK(t(kB, kC) == su(1, kA));
  CHECK(t(kC, kB) == su(1, kA));
  CHECK(tess::is_normal(t));
}

TEST_CASE("system names") {
  for (QuadSystem s : tess::all_quad_systems()) {
    CHECK(tess::parse_quad_system(tess::to_string(s)) == s);
  }
  CHECK_FALSE(tess::parse_quad_system("octonion").has_value());
}

TEST_CASE("quad_mul examples") {
  auto tess_t = table_ptr(QuadSystem::Tessarine);
  auto one_minus_c = element(tess_t, 1, 0, 0, -1);
  auto one_plus_c = element(tess_t, 1, 0, 0, 1);
  auto prod = tess::quad_mul(one_minus_c, one_plus_c);
  // In the tessarine system c^2 = -1, so the zero divisor pair is 1 -/+ b.
  auto one_minus_b = element(tess_t, 1, 0, -1, 0);
  auto one_plus_b = element(tess_t, 1, 0, 1, 0);
  auto zero = tess::quad_mul(one_minus_b, one_plus_b);
  for (const auto& v : zero.c) CHECK(v == 0);
  CHECK(prod.c[0] == 2);

  auto q = table_ptr(QuadSystem::Quaternion);
  auto a = element(q, 0, 1, 0, 0), b = element(q, 0, 0, 1, 0);
  CHECK(tess::quad_mul(a, b).c == std::array<Rational, 4>{0, 0, 0, 1});
  CHECK(tess::quad_mul(b, a).c == std::array<Rational, 4>{0, 0, 0, -1});

  oracle::RandomRationals rng(31);
  for (QuadSystem s : tess::all_quad_systems()) {
    auto t = table_ptr(s);
    auto v = element(t, rng.next(), rng.next(), rng.next(), rng.next());
    CHECK(tess::quad_mul(element(t, 1, 0, 0, 0), v).c == v.c);
  }
}

TEST_CASE("elements of different tables do not mix") {
  auto u = element(table_ptr(QuadSystem::Quaternion), 1, 0, 0, 0);
  auto v = element(table_ptr(QuadSystem::Tessarine), 1, 0, 0, 0);
  try {
    tess::quad_mul(u, v);
    FAIL("expected TableMismatch");
  } catch (const tess::Error& e) {
    CHECK(e.kind() == tess::ErrorKind::TableMismatch);
  }
}

TEST_CASE("tessarines are the bicomplex numbers under a -> i, b -> k, c -> -h") {
  using BC = tess::Bicomplex<Rational>;
  auto t = table_ptr(QuadSystem::Tessarine);
  auto to_bc = [](const tess::QuadElement<Rational>& u) {
    return BC{u.c[0], u.c[1], -u.c[3], u.c[2]};
  };
  oracle::RandomRationals rng(32);
  for (int n = 0; n < 100; ++n) {
    auto u = element(t, rng.next(), rng.next(), rng.next(), rng.next());
    auto v = element(t, rng.next(), rng.next(), rng.next(), rng.next());
    REQUIRE(to_bc(tess::quad_mul(u, v)) == to_bc(u) * to_bc(v));
  }
}

TEST_CASE("norm forms") {
  oracle::RandomRationals rng(33);
  auto q = table_ptr(QuadSystem::Quaternion);
  auto cq = table_ptr(QuadSystem::Coquaternion);
  for (int n = 0; n < 50; ++n) {
    Rational w = rng.next(), x = rng.next(), y = rng.next(), z = rng.next();
    auto u = element(q, w, x, y, z);
    Rational quat = (w * w + x * x + y * y + z * z) * (w * w + x * x + y * y + z * z);
    REQUIRE(tess::norm_form(u) == quat);
    REQUIRE(oracle::leibniz_det(left_matrix(u)) == quat);
    auto v = element(cq, w, x, y, z);
    Rational coq = (w * w + x * x - y * y - z * z) * (w * w + x * x - y * y - z * z);
    REQUIRE(tess::norm_form(v) == coq);
    REQUIRE(oracle::leibniz_det(left_matrix(v)) == coq);
  }
  for (QuadSystem s : tess::all_quad_systems()) {
    CHECK(tess::norm_form(element(table_ptr(s), 1, 0, 0, 0)) == 1);
  }
}

TEST_CASE("norm forms are multiplicative") {
  oracle::RandomRationals rng(34);
  for (QuadSystem s : tess::all_quad_systems()) {
    auto t = table_ptr(s);
    for (int n = 0; n < 200; ++n) {
      auto u = element(t, rng.next(), rng.next(), rng.next(), rng.next());
      auto v = element(t, rng.next(), rng.next(), rng.next(), rng.next());
      REQUIRE(tess::norm_form(tess::quad_mul(u, v)) == tess::norm_form(u) * tess::norm_form(v));
      REQUIRE(tess::norm_form(u) == oracle::leibniz_det(left_matrix(u)));
    }
  }
}

TEST_CASE("coquaternions have zero divisors") {
  auto u = element(table_ptr(QuadSystem::Coquaternion), 1, 0, 1, 0);
  CHECK(tess::norm_form(u) == 0);
  auto v = element(table_ptr(QuadSystem::Coquaternion), 1, 0, -1, 0);
  auto p = tess::quad_mul(u, v);
  for (const auto& c : p.c) CHECK(c == 0);
}
