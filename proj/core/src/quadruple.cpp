#include "tess/quadruple.hpp"

#include <algorithm>

namespace tess {

SignedUnit operator*(int sign, SignedUnit u) { return {sign * u.sign, u.index}; }

std::string to_string(SignedUnit u) {
  static constexpr std::array<const char*, 4> names{"1", "a", "b", "c"};
  return (u.sign < 0 ? "-" : "") + std::string(names[u.index]);
}

SignedUnit CayleyTable::multiply(SignedUnit u, SignedUnit v) const {
  SignedUnit p = products_[u.index][v.index];
  return {u.sign * v.sign * p.sign, p.index};
}

QuadSignature CayleyTable::signature() const {
  return {products_[1][1].sign, products_[2][2].sign};
}

bool is_associative(const CayleyTable& t) {
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        SignedUnit ex{1, x}, ey{1, y}, ez{1, z};
        if (t.multiply(t.multiply(ex, ey), ez) != t.multiply(ex, t.multiply(ey, ez))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_normal(const CayleyTable& t) {
  for (int x = 0; x < 4; ++x) {
    for (int y = x + 1; y < 4; ++y) {
      if (t(x, y) != t(y, x)) return false;
    }
  }
  return true;
}

std::vector<CayleyTable> derive_table(QuadSignature sig) {
  auto valid = [](int s) { return s == 1 || s == -1; };
  if (!valid(sig.sq_a) || !valid(sig.sq_b)) {
    throw Error(ErrorKind::InvalidArgument, "generator squares must be +1 or -1");
  }
  std::array<SignedUnit, 8> candidates;
  for (int n = 0; n < 8; ++n) candidates[n] = {(n % 2 == 0) ? 1 : -1, n / 2};

  CayleyTable::Grid grid;
  for (int x = 0; x < 4; ++x) {
    grid[0][x] = {1, x};
    grid[x][0] = {1, x};
  }
  grid[1][1] = {sig.sq_a, 0};
  grid[2][2] = {sig.sq_b, 0};
  grid[1][2] = {1, 3};

  // Unknown cells: ba, ac, ca, bc, cb, cc.
  static constexpr std::array<std::pair<int, int>, 6> unknown{
      {{2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 3}}};

  std::vector<CayleyTable> found;
  std::array<int, 6> choice{};
  while (true) {
    for (std::size_t u = 0; u < unknown.size(); ++u) {
      grid[unknown[u].first][unknown[u].second] = candidates[choice[u]];
    }
    CayleyTable table(grid);
    if (is_associative(table)) found.push_back(table);

    std::size_t u = 0;
    while (u < choice.size() && ++choice[u] == 8) choice[u++] = 0;
    if (u == choice.size()) break;
  }
  std::stable_sort(found.begin(), found.end(), [](const CayleyTable& a, const CayleyTable& b) {
    return is_normal(a) && !is_normal(b);
  });
  return found;
}

std::string_view to_string(QuadSystem s) {
  switch (s) {
    case QuadSystem::Quaternion: return "quaternion";
    case QuadSystem::Tessarine: return "tessarine";
    case QuadSystem::Coquaternion: return "coquaternion";
    case QuadSystem::Cotessarine: return "cotessarine";
  }
  return "";
}

std::optional<QuadSystem> parse_quad_system(std::string_view name) {
  for (QuadSystem s : all_quad_systems()) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

const std::array<QuadSystem, 4>& all_quad_systems() {
  static const std::array<QuadSystem, 4> systems{
      QuadSystem::Quaternion, QuadSystem::Tessarine, QuadSystem::Coquaternion,
      QuadSystem::Cotessarine};
  return systems;
}

QuadSignature signature_of(QuadSystem s) {
  switch (s) {
    case QuadSystem::Quaternion: return {-1, -1};
    case QuadSystem::Tessarine: return {-1, 1};
    // -a^2 = b^2 = c^2 = 1; c^2 follows from the table.
    case QuadSystem::Coquaternion: return {-1, 1};
    case QuadSystem::Cotessarine: return {1, 1};
  }
  return {};
}

CayleyTable system_table(QuadSystem s) {
  bool want_normal = s == QuadSystem::Tessarine || s == QuadSystem::Cotessarine;
  for (const CayleyTable& t : derive_table(signature_of(s))) {
    if (is_normal(t) == want_normal) return t;
  }
  throw Error(ErrorKind::InvalidArgument,
              "no table found for " + std::string(to_string(s)));
}

std::array<std::string, 4> unit_names(QuadSystem s) {
  switch (s) {
    case QuadSystem::Quaternion: return {"1", "i", "j", "k"};
    case QuadSystem::Tessarine: return {"1", "i", "j", "k"};
    case QuadSystem::Coquaternion: return {"1", "a", "b", "c"};
    case QuadSystem::Cotessarine: return {"1", "d", "e", "f"};
  }
  return {"1", "a", "b", "c"};
}

}  // namespace tess
