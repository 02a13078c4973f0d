#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "toric/errors.hpp"

namespace toric {

Fan::Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  for (auto& c : cones_) std::sort(c.begin(), c.end());
}

bool Fan::is_face(const Cone& sub) const {
  Cone s = sub;
  std::sort(s.begin(), s.end());
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) {
    return std::includes(c.begin(), c.end(), s.begin(), s.end());
  });
}

namespace {

std::string cone_string(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  os << '}';
  return os.str();
}

IntMatrix cone_matrix(const Fan& f, const Cone& c) {
  IntMatrix m(f.dim(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const auto& r = f.ray(c[j]);
    for (std::size_t i = 0; i < f.dim(); ++i) m(i, j) = r[i];
  }
  return m;
}

struct FacetIncidence {
  std::size_t cone;
  std::size_t omitted_ray;
};

std::map<Cone, std::vector<FacetIncidence>> facet_map(const Fan& f) {
  std::map<Cone, std::vector<FacetIncidence>> facets;
  for (std::size_t c = 0; c < f.num_max_cones(); ++c) {
    const Cone& cone = f.max_cone(c);
    for (std::size_t i = 0; i < cone.size(); ++i) {
      Cone facet;
      facet.reserve(cone.size() - 1);
      for (std::size_t j = 0; j < cone.size(); ++j) {
        if (j != i) facet.push_back(cone[j]);
      }
      facets[std::move(facet)].push_back({c, cone[i]});
    }
  }
  return facets;
}

bool check_well_formed(const Fan& f, std::vector<Defect>& defects) {
  const std::size_t before = defects.size();
  const std::size_t n = f.dim();
  if (n == 0) defects.push_back({"fan", std::nullopt, "dimension must be positive"});
  if (f.num_rays() == 0) defects.push_back({"fan", std::nullopt, "no rays"});
  if (f.num_max_cones() == 0) defects.push_back({"fan", std::nullopt, "no maximal cones"});

  std::set<LatticeVector> seen;
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    const auto& r = f.ray(i);
    if (r.size() != n) {
      defects.push_back({"ray", i, "length " + std::to_string(r.size()) + " differs from dimension " +
                                       std::to_string(n)});
      continue;
    }
    if (is_zero(r)) {
      defects.push_back({"ray", i, "zero vector"});
      continue;
    }
    if (content(r) != Integer(1)) {
      defects.push_back({"ray", i, "not primitive: " + to_string(r) + " has entry gcd " + content(r).to_string()});
    }
    if (!seen.insert(r).second) defects.push_back({"ray", i, "duplicate of an earlier ray " + to_string(r)});
  }

  std::vector<bool> used(f.num_rays(), false);
  std::set<Cone> cones_seen;
  for (std::size_t c = 0; c < f.num_max_cones(); ++c) {
    const Cone& cone = f.max_cone(c);
    if (cone.size() != n) {
      defects.push_back({"cone", c, "has " + std::to_string(cone.size()) + " rays, expected " + std::to_string(n)});
    }
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end()) {
      defects.push_back({"cone", c, "repeats a ray index"});
    }
    for (std::size_t idx : cone) {
      if (idx >= f.num_rays()) {
        defects.push_back({"cone", c, "ray index " + std::to_string(idx) + " out of range"});
      } else {
        used[idx] = true;
      }
    }
    if (!cones_seen.insert(cone).second) defects.push_back({"cone", c, "duplicate maximal cone " + cone_string(cone)});
  }
  for (std::size_t i = 0; i < f.num_rays(); ++i) {
    if (!used[i]) defects.push_back({"ray", i, "not contained in any maximal cone"});
  }
  return defects.size() == before;
}

/// Exact membership of p in the simplicial cone c (columns of m), by Cramer's
/// rule: p = m * lambda with lambda_i = det(m_i) / det(m).
bool cramer_contains(const IntMatrix& m, const Integer& det, std::span<const Integer> p) {
  const int s = det.sign();
  for (std::size_t i = 0; i < m.cols(); ++i) {
    IntMatrix mi = m;
    for (std::size_t r = 0; r < m.rows(); ++r) mi(r, i) = p[r];
    if (determinant(std::move(mi)).sign() * s < 0) return false;
  }
  return true;
}

class PointLocator {
 public:
  PointLocator(const Fan& f, const ConeBases& bases, std::uint64_t seed)
      : fan_(f), bases_(bases), rng_(seed ^ 0x9e3779b97f4a7c15ULL) {
    const auto facets = facet_map(f);
    neighbours_.assign(f.num_max_cones(), std::vector<std::optional<std::size_t>>(f.dim()));
    for (const auto& [facet, inc] : facets) {
      if (inc.size() != 2) continue;
      for (int k = 0; k < 2; ++k) {
        const auto& self = inc[k];
        const auto& other = inc[1 - k];
        const Cone& cone = f.max_cone(self.cone);
        const auto pos = static_cast<std::size_t>(
            std::lower_bound(cone.begin(), cone.end(), self.omitted_ray) - cone.begin());
        neighbours_[self.cone][pos] = other.cone;
      }
    }
  }

  bool locate(std::span<const Integer> p) {
    const std::size_t cap = 2 * fan_.num_max_cones() + 16;
    std::size_t cur = last_;
    std::vector<std::size_t> negative;
    for (std::size_t step = 0; step < cap; ++step) {
      const LatticeVector lambda = bases_.coordinates(cur, p);
      negative.clear();
      for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i].sign() < 0) negative.push_back(i);
      }
      if (negative.empty()) {
        last_ = cur;
        return true;
      }
      const std::size_t pick = negative[rng_() % negative.size()];
      const auto next = neighbours_[cur][pick];
      if (!next) break;
      cur = *next;
    }
    // The walk stalled (boundary facet or step cap); fall back to a full scan.
    for (std::size_t c = 0; c < fan_.num_max_cones(); ++c) {
      bool inside = true;
      for (std::size_t i = 0; i < fan_.dim() && inside; ++i) inside = bases_.coordinate(c, i, p).sign() >= 0;
      if (inside) {
        last_ = c;
        return true;
      }
    }
    return false;
  }

 private:
  const Fan& fan_;
  const ConeBases& bases_;
  std::mt19937_64 rng_;
  std::vector<std::vector<std::optional<std::size_t>>> neighbours_;
  std::size_t last_ = 0;
};

}  // namespace

ConeBases ConeBases::from_inverses(std::vector<IntMatrix> inverses) {
  ConeBases b;
  b.inverses_ = std::move(inverses);
  return b;
}

ConeBases::ConeBases(const Fan& f) {
  inverses_.reserve(f.num_max_cones());
  for (std::size_t c = 0; c < f.num_max_cones(); ++c) {
    auto inv = unimodular_inverse(cone_matrix(f, f.max_cone(c)));
    if (!inv) throw StructuralError("maximal cone " + std::to_string(c) + " is not unimodular");
    inverses_.push_back(std::move(*inv));
  }
}

LatticeVector ConeBases::coordinates(std::size_t cone, std::span<const Integer> v) const {
  return inverses_.at(cone).apply(v);
}

Integer ConeBases::coordinate(std::size_t cone, std::size_t pos, std::span<const Integer> v) const {
  const IntMatrix& inv = inverses_.at(cone);
  Integer acc;
  for (std::size_t j = 0; j < inv.cols(); ++j) {
    if (!v[j].is_zero() && !inv(pos, j).is_zero()) acc += inv(pos, j) * v[j];
  }
  return acc;
}

ValidationReport validate_fan(const Fan& f, std::uint64_t seed, std::size_t samples) {
  ValidationReport rep;
  rep.well_formed = check_well_formed(f, rep.defects);
  if (!rep.well_formed) {
    rep.defects.push_back({"fan", std::nullopt, "smoothness and completeness not evaluated: fan is not well formed"});
    return rep;
  }
  const std::size_t n = f.dim();

  // Unimodular cones get an exact inverse; the rest keep their determinant.
  std::vector<std::optional<IntMatrix>> inverses(f.num_max_cones());
  std::vector<Integer> dets(f.num_max_cones());
  rep.smooth = true;
  for (std::size_t c = 0; c < f.num_max_cones(); ++c) {
    const IntMatrix m = cone_matrix(f, f.max_cone(c));
    inverses[c] = unimodular_inverse(m);
    if (inverses[c]) continue;
    dets[c] = determinant(m);
    rep.smooth = false;
    rep.defects.push_back({"cone", c, "not unimodular: |det| = " + abs(dets[c]).to_string()});
  }

  // Pseudo-manifold condition and opposite-side check across each wall.
  bool walls_ok = true;
  for (const auto& [facet, inc] : facet_map(f)) {
    if (inc.size() != 2) {
      walls_ok = false;
      rep.defects.push_back({"wall", std::nullopt,
                             "codimension-one face " + cone_string(facet) + " lies in " +
                                 std::to_string(inc.size()) + " maximal cone(s), expected 2"});
      continue;
    }
    const std::size_t c0 = inc[0].cone;
    const Cone& cone = f.max_cone(c0);
    const auto pos = static_cast<std::size_t>(std::find(cone.begin(), cone.end(), inc[0].omitted_ray) - cone.begin());
    const LatticeVector& other = f.ray(inc[1].omitted_ray);
    int side = 0;  // sign of the coefficient of u in the expansion of u'
    if (inverses[c0]) {
      Integer coeff;
      for (std::size_t j = 0; j < n; ++j) {
        if (!other[j].is_zero()) coeff += (*inverses[c0])(pos, j) * other[j];
      }
      side = coeff.sign();
    } else if (!dets[c0].is_zero()) {
      IntMatrix m = cone_matrix(f, cone);
      for (std::size_t r = 0; r < n; ++r) m(r, pos) = other[r];
      side = determinant(std::move(m)).sign() * dets[c0].sign();
    } else {
      continue;
    }
    if (side >= 0) {
      walls_ok = false;
      rep.defects.push_back({"wall", std::nullopt,
                             "adjacent cones " + std::to_string(c0) + " and " + std::to_string(inc[1].cone) +
                                 " of face " + cone_string(facet) + " do not lie on opposite sides"});
    }
  }

  // Seeded point location on random lattice points (a rational point and its
  // integer multiples lie in the same cones).
  bool covered = true;
  std::mt19937_64 rng(seed);
  constexpr std::int64_t kRadius = std::int64_t{1} << 20;
  std::optional<ConeBases> bases;
  std::optional<PointLocator> locator;
  if (rep.smooth) {
    std::vector<IntMatrix> invs;
    invs.reserve(inverses.size());
    for (auto& m : inverses) invs.push_back(std::move(*m));
    bases.emplace(ConeBases::from_inverses(std::move(invs)));
    locator.emplace(f, *bases, seed);
  }
  LatticeVector p(n);
  for (std::size_t s = 0; s < samples; ++s) {
    do {
      for (auto& x : p) x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * kRadius + 1)) - kRadius;
    } while (is_zero(p));
    bool found = false;
    if (locator) {
      found = locator->locate(p);
    } else {
      for (std::size_t c = 0; c < f.num_max_cones() && !found; ++c) {
        if (inverses[c]) {
          bool inside = true;
          const LatticeVector lambda = inverses[c]->apply(p);
          for (const auto& x : lambda) inside = inside && x.sign() >= 0;
          found = inside;
        } else if (!dets[c].is_zero()) {
          found = cramer_contains(cone_matrix(f, f.max_cone(c)), dets[c], p);
        }
      }
    }
    if (!found) {
      covered = false;
      rep.defects.push_back({"sample", s, "point " + to_string(p) + " lies in no maximal cone"});
    }
  }
  rep.complete = walls_ok && covered;
  return rep;
}

std::vector<Wall> enumerate_walls(const Fan& f) {
  std::vector<Wall> walls;
  for (auto& [facet, inc] : facet_map(f)) {
    if (inc.size() != 2) {
      throw StructuralError("completeness violation: face " + cone_string(facet) + " lies in " +
                            std::to_string(inc.size()) + " maximal cone(s)");
    }
    walls.push_back(Wall{facet, {inc[0].cone, inc[1].cone}, {inc[0].omitted_ray, inc[1].omitted_ray}});
  }
  return walls;
}

}  // namespace toric
