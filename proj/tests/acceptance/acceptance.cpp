// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "algebra_oracles.hpp"
#include "newton_oracle.hpp"
#include "random_values.hpp"
#include "tess/bicomplex.hpp"
#include "tess/biquaternion.hpp"
#include "tess/cli.hpp"
#include "tess/error.hpp"
#include "tess/multicomplex.hpp"
#include "tess/polysolve.hpp"
#include "tess/quadruple.hpp"

using json = nlohmann::json;
using tess::Rational;
using BC = tess::Bicomplex<Rational>;
using BD = tess::Bicomplex<double>;
using MC = tess::Multicomplex<Rational>;
using BQ = tess::Biquaternion<Rational>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

json cli_json(std::vector<std::string> args, Outcome& out) {
  args.push_back("--json");
  std::ostringstream o, e;
  int code = tess::cli::run(args, o, e);
  if (code != 0) {
    out.fail("cli exit " + std::to_string(code) + ": " + e.str());
    return json();
  }
  return json::parse(o.str());
}

std::vector<Rational> bc_coeffs(const BC& a) { return {a.w, a.x, a.y, a.z}; }

// Bicomplex product through the tower construction with masks
// 1 -> 0, i -> 1, h -> 2, k -> 3.
std::vector<Rational> tower_product(const BC& a, const BC& b) {
  return oracle::tower_mul(bc_coeffs(a), bc_coeffs(b));
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

Outcome zero_divisor_identity() {
  Outcome out;
  BC a{Rational(1), Rational(0), Rational(0), Rational(-1)};
  BC b{Rational(1), Rational(0), Rational(0), Rational(1)};
  if (!(a * b).is_zero()) out.fail("library product is nonzero");
  if (!all_zero(tower_product(a, b))) out.fail("oracle product is nonzero");
  json j = cli_json({"bc", "mul", "1 - 1*k", "1 + 1*k"}, out);
  if (out.ok && j["result"] != json{{"w", "0"}, {"x", "0"}, {"y", "0"}, {"z", "0"}}) {
    out.fail("cli result " + j["result"].dump());
  }
  return out;
}

Outcome split_isomorphism() {
  Outcome out;
  oracle::RandomRationals rng(1001);
  for (int n = 0; n < 500 && out.ok; ++n) {
    BC a = rng.bicomplex(), b = rng.bicomplex();
    auto da = tess::bc_decompose(a), db = tess::bc_decompose(b);
    auto [z, zp] = oracle::split_by_substitution(a);
    if (!(da.z1 == z && da.z2 == zp)) out.fail("split differs from substitution at pair " + std::to_string(n));
    if (!(tess::bc_decompose(a + b) == da + db)) out.fail("not additive at pair " + std::to_string(n));
    if (!(tess::bc_decompose(a * b) == da * db)) out.fail("not multiplicative at pair " + std::to_string(n));
    if (!(tess::bc_recompose(da) == a)) out.fail("round trip failed at pair " + std::to_string(n));
  }
  return out;
}

Outcome ideal_characterization() {
  Outcome out;
  std::vector<BC> grid;
  for (int w = -2; w <= 2; ++w)
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y)
        for (int z = -2; z <= 2; ++z)
          if (w || x || y || z) grid.push_back({Rational(w), Rational(x), Rational(y), Rational(z)});
  std::vector<tess::IdealTag> tags;
  for (const BC& a : grid) tags.push_back(tess::bc_ideal(a));
  long zeros = 0;
  for (std::size_t p = 0; p < grid.size() && out.ok; ++p) {
    for (std::size_t q = 0; q < grid.size(); ++q) {
      bool zero = all_zero(tower_product(grid[p], grid[q]));
      bool opposite = (tags[p] == tess::IdealTag::FirstSet && tags[q] == tess::IdealTag::SecondSet) ||
                      (tags[p] == tess::IdealTag::SecondSet && tags[q] == tess::IdealTag::FirstSet);
      if (zero != opposite) {
        out.fail(tess::format_bicomplex(grid[p]) + " * " + tess::format_bicomplex(grid[q]));
        break;
      }
      zeros += zero ? 1 : 0;
    }
  }
  if (out.ok && zeros == 0) out.fail("no zero products on the grid");
  if (out.ok) out.detail = std::to_string(zeros) + " zero products";
  return out;
}

template <class E>
E horner(const std::vector<E>& p, const E& z) {
  E acc = p.back();
  for (std::size_t k = p.size() - 1; k-- > 0;) acc = acc * z + p[k];
  return acc;
}

Outcome root_count_law() {
  Outcome out;
  std::vector<BC> p{BC::one(), BC(), BC::one()};
  auto set = tess::solve(p);
  std::vector<BC> want{BC::i(), BC() - BC::i(), BC::h(), BC() - BC::h()};
  if (set.roots.size() != 4) out.fail("z^2 + 1 has " + std::to_string(set.roots.size()) + " roots");
  for (const BC& w : want) {
    bool found = std::any_of(set.roots.begin(), set.roots.end(), [&](const auto& r) { return r.value == w; });
    if (!found) out.fail("missing root " + tess::format_bicomplex(w));
  }
  for (const auto& r : set.roots) {
    if (!all_zero(bc_coeffs(horner(p, r.value)))) out.fail("nonzero residual");
  }

  std::mt19937_64 rng(1004);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 50 && out.ok; ++trial) {
    std::vector<BD> q(4);
    for (std::size_t k = 0; k < q.size(); ++k) {
      tess::Complex<double> z1(u(rng), u(rng)), z2(u(rng), u(rng));
      if (k > 2) z1 = {};
      q[k] = tess::bc_recompose(tess::SplitPair<double>{z1, z2});
    }
    auto s = tess::solve(q);
    if (s.total_multiplicity() != 6) out.fail("degree (2,3) gave " + std::to_string(s.total_multiplicity()));
    for (const auto& r : s.roots) {
      // substitution through the oracle product
      std::vector<double> acc{q.back().w, q.back().x, q.back().y, q.back().z};
      std::vector<double> z{r.value.w, r.value.x, r.value.y, r.value.z};
      for (std::size_t k = q.size() - 1; k-- > 0;) {
        acc = oracle::tower_mul(acc, z);
        acc[0] += q[k].w, acc[1] += q[k].x, acc[2] += q[k].y, acc[3] += q[k].z;
      }
      double res = std::sqrt(acc[0] * acc[0] + acc[1] * acc[1] + acc[2] * acc[2] + acc[3] * acc[3]);
      if (res > 1e-9) out.fail("residual " + std::to_string(res));
    }
  }
  return out;
}

Outcome degeneracy() {
  Outcome out;
  BC g{Rational(1, 2), Rational(0), Rational(0), Rational(-1, 2)};
  auto set = tess::solve<Rational>({BC(), g});
  if (set.kind != tess::RootKind::InfiniteFamily) out.fail("g z = 0 not reported as a family");
  return out;
}

std::string unit_text(tess::SignedUnit u) {
  static const char* names[4] = {"1", "a", "b", "c"};
  return std::string(u.sign < 0 ? "-" : "") + names[u.index];
}

using Grid = std::array<std::array<std::string, 4>, 4>;

bool associative_by_triples(const tess::CayleyTable& t) {
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) {
        tess::SignedUnit xy = t(x, y), yz = t(y, z);
        tess::SignedUnit l = t(xy.index, z), r = t(x, yz.index);
        if (xy.sign * l.sign != yz.sign * r.sign || l.index != r.index) return false;
      }
  return true;
}

Outcome quadruple_tables() {
  Outcome out;
  struct Expected {
    tess::QuadSystem system;
    Grid grid;
    bool normal;
  };
  const std::vector<Expected> expected{
      {tess::QuadSystem::Quaternion,
       {{{"1", "a", "b", "c"}, {"a", "-1", "c", "-b"}, {"b", "-c", "-1", "a"}, {"c", "b", "-a", "-1"}}},
       false},
      {tess::QuadSystem::Tessarine,
       {{{"1", "a", "b", "c"}, {"a", "-1", "c", "-b"}, {"b", "c", "1", "a"}, {"c", "-b", "a", "-1"}}},
       true},
      {tess::QuadSystem::Coquaternion,
       {{{"1", "a", "b", "c"}, {"a", "-1", "c", "-b"}, {"b", "-c", "1", "-a"}, {"c", "b", "a", "1"}}},
       false},
      {tess::QuadSystem::Cotessarine,
       {{{"1", "a", "b", "c"}, {"a", "1", "c", "b"}, {"b", "c", "1", "a"}, {"c", "b", "a", "1"}}},
       true},
  };
  for (const auto& e : expected) {
    std::string name(tess::to_string(e.system));
    auto derived = tess::derive_table(tess::signature_of(e.system));
    auto match = std::find_if(derived.begin(), derived.end(), [&](const tess::CayleyTable& t) {
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          if (unit_text(t(r, c)) != e.grid[r][c]) return false;
      return true;
    });
    if (match == derived.end()) {
      out.fail(name + " table not derived");
      continue;
    }
    if (!associative_by_triples(*match)) out.fail(name + " not associative");
    if (tess::is_normal(*match) != e.normal) out.fail(name + " normality flag");
    if (!(tess::system_table(e.system) == *match)) out.fail(name + " system table differs");
  }
  return out;
}

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

Outcome norm_forms() {
  Outcome out;
  auto q = std::make_shared<const tess::CayleyTable>(tess::system_table(tess::QuadSystem::Quaternion));
  auto cq = std::make_shared<const tess::CayleyTable>(tess::system_table(tess::QuadSystem::Coquaternion));
  oracle::RandomRationals rng(1007);
  for (int n = 0; n < 50; ++n) {
    Rational w = rng.next(), x = rng.next(), y = rng.next(), z = rng.next();
    Rational s = w * w + x * x + y * y + z * z;
    Rational t = w * w + x * x - y * y - z * z;
    auto u = tess::quad_element(q, w, x, y, z);
    auto v = tess::quad_element(cq, w, x, y, z);
    if (tess::norm_form(u) != s * s || oracle::leibniz_det(left_matrix(u)) != s * s) {
      out.fail("quaternion norm at sample " + std::to_string(n));
    }
    if (tess::norm_form(v) != t * t || oracle::leibniz_det(left_matrix(v)) != t * t) {
      out.fail("coquaternion norm at sample " + std::to_string(n));
    }
  }
  return out;
}

Outcome biquaternion_nullifier() {
  Outcome out;
  BQ k = BQ::unit(3), w = BQ::omega();
  if (!((k + w) * (k - w)).is_zero()) out.fail("product is nonzero");
  if ((k + w).is_zero() || (k - w).is_zero()) out.fail("a factor vanishes");
  return out;
}

using CQ = oracle::CQuat;

CQ to_cquat(const tess::Biquaternion<double>& q) {
  CQ r;
  for (int n = 0; n < 4; ++n) r[n] = {q.c[n].re, q.c[n].im};
  return r;
}

double distance(const CQ& a, const CQ& b) {
  double s = 0.0;
  for (int n = 0; n < 4; ++n) s += std::norm(a[n] - b[n]);
  return std::sqrt(s);
}

Outcome six_roots() {
  Outcome out;
  auto b = tess::bq_to_double(BQ::unit(1)), c = tess::bq_to_double(BQ::unit(2));
  auto res = tess::bq_solve_quadratic(b, c);
  int real = 0;
  for (const auto& s : res.solutions) {
    real += s.real_quaternion ? 1 : 0;
    CQ q = to_cquat(s.q);
    CQ lhs = oracle::hamilton(q, q), rhs = oracle::hamilton(q, to_cquat(b));
    rhs[2] += 1.0;
    if (distance(lhs, rhs) > 1e-9) out.fail("residual " + std::to_string(distance(lhs, rhs)));
  }
  if (res.solutions.size() != 6 || real != 2) {
    out.fail(std::to_string(res.solutions.size()) + " solutions, " + std::to_string(real) + " real");
  }
  auto clusters = oracle::newton_multistart(to_cquat(b), to_cquat(c), 240, 1009);
  if (clusters.size() != 6) out.fail("Newton found " + std::to_string(clusters.size()) + " clusters");
  for (const auto& cl : clusters) {
    bool matched = std::any_of(res.solutions.begin(), res.solutions.end(),
                               [&](const auto& s) { return distance(to_cquat(s.q), cl.q) < 1e-7; });
    if (!matched) out.fail("Newton cluster not among the solutions");
  }
  return out;
}

// a = (p + q w) + (r + s w) i  ->  p + r i + q h + s k
BC complanar_image(const BQ& a) { return {a.c[0].re, a.c[1].re, a.c[0].im, a.c[1].im}; }

Outcome complanar_isomorphism() {
  Outcome out;
  using C = tess::Complex<Rational>;
  oracle::RandomRationals rng(1010);
  for (int n = 0; n < 100; ++n) {
    BQ a, b;
    a.c[0] = C(rng.next(), rng.next());
    a.c[1] = C(rng.next(), rng.next());
    b.c[0] = C(rng.next(), rng.next());
    b.c[1] = C(rng.next(), rng.next());
    BC fa = tess::complanar_to_bicomplex(a), fb = tess::complanar_to_bicomplex(b);
    if (!(fa == complanar_image(a))) out.fail("unexpected image of a complanar element");
    if (!(tess::complanar_to_bicomplex(a * b) == fa * fb)) out.fail("not multiplicative at pair " + std::to_string(n));
    if (!(bc_coeffs(fa * fb) == tower_product(fa, fb))) out.fail("bicomplex product disagrees with oracle");
  }
  return out;
}

Outcome one_radical_example() {
  Outcome out;
  json j = cli_json({"surd", "analyze", "2*x + sqrt(x^2-7) = 5"}, out);
  if (!out.ok) return out;
  if (j["stock"]["coeffs"] != json::array({"32", "-20", "3"})) out.fail("stock " + j["stock"]["coeffs"].dump());
  if (j["order"] != "2/2") out.fail("order " + j["order"].dump());
  for (const auto& c : j["congeners"]) {
    bool minus = c["signs"] == json::array({-1});
    if (minus && (c["status"] != "Possible" || c["roots"] != json::array({"8/3", "4"}))) {
      out.fail("minus congener " + c.dump());
    }
    if (!minus && c["status"] != "Impossible") out.fail("plus congener " + c.dump());
  }
  // 2x - sqrt(x^2 - 7) = 5 at the roots
  for (Rational x : {Rational(4), Rational(8, 3)}) {
    Rational lhs = Rational(2) * x - Rational(5), sq = x * x - Rational(7);
    if (lhs < 0 || lhs * lhs != sq) out.fail("root does not satisfy the minus congener");
  }
  return out;
}

Outcome bare_radical_example() {
  Outcome out;
  json j = cli_json({"surd", "analyze", "1 + sqrt(x) = 0"}, out);
  if (!out.ok) return out;
  if (j["order"] != "1/2") out.fail("order " + j["order"].dump());
  if (j["roots"].size() != 1 || j["roots"][0]["value"] != "1") out.fail("roots " + j["roots"].dump());
  for (const auto& c : j["congeners"]) {
    bool minus = c["signs"] == json::array({-1});
    if (minus && (c["status"] != "Possible" || c["roots"] != json::array({"1"}))) out.fail("1 - sqrt(x) " + c.dump());
    if (!minus && c["status"] != "Impossible") out.fail("1 + sqrt(x) " + c.dump());
  }
  return out;
}

Outcome multicomplex_consistency() {
  Outcome out;
  const BC basis[4] = {BC::one(), BC::i(), BC::h(), BC::k()};
  for (const BC& a : basis)
    for (const BC& b : basis)
      if (!(tess::mc_to_bicomplex(tess::mc_mul(tess::mc_from_bicomplex(a), tess::mc_from_bicomplex(b))) == a * b)) {
        out.fail("basis product differs");
      }

  oracle::RandomRationals rng(1013);
  for (int n = 0; n < 50; ++n) {
    MC a = rng.multicomplex(3);
    auto s = tess::mc_split(a);
    if (s.size() != 4) out.fail("split has " + std::to_string(s.size()) + " components");
    if (!(tess::mc_unsplit(3, s) == a)) out.fail("round trip failed");
  }

  std::vector<MC> p{MC::scalar(3, Rational(1)), MC(3), MC::scalar(3, Rational(1))};
  auto set = tess::mc_solve(p);
  if (set.roots.size() != 16) out.fail(std::to_string(set.roots.size()) + " roots over order 3");
  std::vector<std::size_t> picks{0, 3, 7, 11, 15};
  for (std::size_t n : picks) {
    if (n >= set.roots.size()) break;
    const auto& z = set.roots[n].value.coeffs();
    auto sq = oracle::tower_mul(z, z);
    sq[0] += 1;
    if (!all_zero(sq)) out.fail("root " + std::to_string(n) + " fails substitution");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"zero-divisor identity (1-k)(1+k) = 0", zero_divisor_identity},
      {"split isomorphism on 500 random pairs", split_isomorphism},
      {"ideal characterization on the {-2..2}^4 grid", ideal_characterization},
      {"root-count law", root_count_law},
      {"g z = 0 is an infinite family", degeneracy},
      {"quadruple tables derived from signatures", quadruple_tables},
      {"quaternion and coquaternion norm forms", norm_forms},
      {"biquaternion nullifier (k+w)(k-w) = 0", biquaternion_nullifier},
      {"six roots of q^2 = q i + j", six_roots},
      {"complanar biquaternions are bicomplex", complanar_isomorphism},
      {"surd analysis of 2x + sqrt(x^2-7) = 5", one_radical_example},
      {"surd analysis of 1 + sqrt(x) = 0", bare_radical_example},
      {"multicomplex consistency", multicomplex_consistency},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    Outcome o;
    try {
      o = criteria[n].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << (n + 1) << ". " << criteria[n].first;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ')';
    std::cout << '\n';
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed\n";
  return failed;
}
