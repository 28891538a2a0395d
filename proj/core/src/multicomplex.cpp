#include "tess/multicomplex.hpp"

#include <algorithm>
#include <bit>

namespace tess {

std::vector<std::uint32_t> graded_subset_order(int order) {
  if (order < 1 || order > kMaxMulticomplexOrder) {
    throw Error(ErrorKind::InvalidArgument, "multicomplex order out of range");
  }
  std::vector<std::uint32_t> masks(std::size_t{1} << order);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  // By size, then by the sorted unit lists.
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    while (a != 0 && b != 0) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return masks;
}

std::vector<std::string> graded_subset_names(int order) {
  std::vector<std::string> names;
  for (std::uint32_t mask : graded_subset_order(order)) {
    if (mask == 0) {
      names.emplace_back("1");
      continue;
    }
    std::string name;
    for (int b = 0; b < order; ++b) {
      if (mask & (std::uint32_t{1} << b)) name += "i" + std::to_string(b + 1);
    }
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace tess
