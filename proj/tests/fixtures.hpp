#pragma once

#include <initializer_list>
#include <vector>

#include "toric/fan.hpp"

namespace toric::fixtures {

inline Fan make_fan(std::size_t dim, std::initializer_list<std::initializer_list<long>> rays,
                    std::vector<Cone> cones) {
  std::vector<LatticeVector> rs;
  for (auto r : rays) {
    LatticeVector v;
    for (long x : r) v.emplace_back(x);
    rs.push_back(std::move(v));
  }
  return Fan(dim, std::move(rs), std::move(cones));
}

inline Fan hirzebruch(long a) {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

}  // namespace toric::fixtures
