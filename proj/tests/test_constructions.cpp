#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "toric/catalog.hpp"
#include "toric/constructions.hpp"
#include "toric/errors.hpp"
#include "toric/invariants.hpp"

using namespace toric;
using fixtures::hirzebruch;
using nlohmann::json;

namespace {

// Report fields that do not depend on ray labelling.
struct Shape {
  bool fano;
  std::optional<Integer> i, r;
  std::size_t rho;
  std::map<Integer, std::size_t> degrees;
  bool operator==(const Shape&) const = default;
};

Shape shape(const Fan& f) {
  const auto r = fano_report(f);
  return {r.is_fano, r.pseudo_index, r.fano_index, r.picard_rank, r.wall_degrees};
}

std::vector<Fan> fano_pool() {
  return {projective_space(1),
          projective_space(2),
          projective_space(3),
          projective_space(4),
          hirzebruch(1),
          projectivized_split_bundle({{2}, {{0}, {1}}}),
          projectivized_split_bundle({{3}, {{0}, {0}, {1}}}),
          star_subdivision(projective_space(3), {0, 1}).fan_x,
          product(projective_space(1), projective_space(2))};
}

}  // namespace

TEST_CASE("projective space fan") {
  const Fan f = projective_space(3);
  CHECK(f.dim() == 3);
  CHECK(f.num_rays() == 4);
  CHECK(f.num_max_cones() == 4);
  CHECK(f.ray(3) == LatticeVector{-1, -1, -1});
  CHECK(validate_fan(f).ok());
  CHECK_THROWS_AS((void)projective_space(0), PreconditionError);
}

TEST_CASE("product fan") {
  const Fan f = product(projective_space(1), projective_space(2));
  CHECK(f.dim() == 3);
  CHECK(f.num_rays() == 5);
  CHECK(f.num_max_cones() == 6);
  CHECK(f.ray(2) == LatticeVector{0, 1, 0});
  CHECK(validate_fan(f).ok());
  CHECK_THROWS_AS((void)product(Fan(), projective_space(1)), PreconditionError);
}

TEST_CASE("product law on seeded pairs") {
  const auto pool = fano_pool();
  std::mt19937_64 rng(20);
  for (int t = 0; t < 20; ++t) {
    const Fan& f = pool[rng() % pool.size()];
    const Fan& g = pool[rng() % pool.size()];
    const Fan fg = product(f, g);
    REQUIRE(validate_fan(fg).ok());
    const auto rf = fano_report(f), rg = fano_report(g), rfg = fano_report(fg);
    REQUIRE(rfg.is_fano);
    CHECK(*rfg.pseudo_index == std::min(*rf.pseudo_index, *rg.pseudo_index));
    CHECK(*rfg.fano_index == gcd(*rf.fano_index, *rg.fano_index));
    CHECK(rfg.picard_rank == rf.picard_rank + rg.picard_rank);
  }
}

TEST_CASE("split bundle: hirzebruch surfaces") {
  for (long a = 0; a <= 3; ++a) {
    const Fan f = projectivized_split_bundle({{1}, {{0}, {a}}});
    CHECK(validate_fan(f).ok());
    CHECK(shape(f) == shape(hirzebruch(a)));
  }
}

TEST_CASE("split bundle with zero twists is a product") {
  const BundleSpec spec{{2, 1}, {{0, 0}, {0, 0}, {0, 0}}};
  const Fan f = projectivized_split_bundle(spec);
  CHECK(validate_fan(f).ok());
  CHECK(shape(f) == shape(product(product(projective_space(2), projective_space(1)), projective_space(2))));
}

TEST_CASE("split bundle sizes") {
  const BundleSpec spec{{2, 3}, {{0, 0}, {1, 2}, {-1, 0}}};
  CHECK(spec.fiber_rank() == 3);
  CHECK(spec.base_dimension() == 5);
  CHECK(spec.dimension() == 7);
  const Fan f = projectivized_split_bundle(spec);
  CHECK(f.dim() == 7);
  CHECK(f.num_rays() == 3 + 4 + 3);
  CHECK(f.num_max_cones() == 3 * 4 * 3);
  CHECK(validate_fan(f).ok());
  CHECK(bundle_fiber_ray(spec, 0) == 7);
  CHECK(bundle_fiber_ray(spec, 2) == 9);
  CHECK_THROWS_AS((void)bundle_fiber_ray(spec, 3), PreconditionError);
}

TEST_CASE("split bundle fano criterion P(O^r + O(d)^s) over P^a") {
  for (std::size_t a = 1; a <= 4; ++a)
    for (long d = 1; d <= 3; ++d)
      for (std::size_t r = 1; r <= 3; ++r) {
        BundleSpec spec{{a}, {}};
        for (std::size_t j = 0; j < r; ++j) spec.twists.push_back({0});
        spec.twists.push_back({d});
        CHECK(is_fano(projectivized_split_bundle(spec)) == (static_cast<long>(a) >= static_cast<long>(r) * d));
      }
}

TEST_CASE("bundle spec errors") {
  CHECK_THROWS_AS(BundleSpec({}, {{}, {}}).check(), PreconditionError);
  CHECK_THROWS_AS(BundleSpec({0}, {{0}, {1}}).check(), PreconditionError);
  CHECK_THROWS_AS(BundleSpec({1}, {{0}}).check(), PreconditionError);
  CHECK_THROWS_AS(BundleSpec({1}, {{0}, {1, 2}}).check(), PreconditionError);
  CHECK_THROWS_AS(BundleSpec({1}, {{1}, {1}}).check(), PreconditionError);
  CHECK_THROWS_AS((void)projectivized_split_bundle({{1}, {{1}, {1}}}), PreconditionError);
}

TEST_CASE("bundle spec json") {
  const BundleSpec spec{{2}, {{0}, {1}}};
  CHECK(bundle_spec_from_json(to_json(spec)) == spec);
  CHECK_THROWS_AS((void)bundle_spec_from_json(json::parse(R"({"base_dims":[2]})")), InvalidInput);
  CHECK_THROWS_AS((void)bundle_spec_from_json(json::parse(R"({"base_dims":[2],"twists":[[0],[1]],"x":1})")),
                  InvalidInput);
  CHECK_THROWS_AS((void)bundle_spec_from_json(json::parse(R"({"base_dims":[-1],"twists":[[0],[1]]})")), InvalidInput);
  CHECK_THROWS_AS((void)bundle_spec_from_json(json::parse(R"({"base_dims":[1],"twists":[[0],["a"]]})")), InvalidInput);
}

TEST_CASE("subbundle center cones") {
  const BundleSpec spec{{5}, {{0}, {0}, {0}, {0}, {1}, {1}}};
  const Cone c = subbundle_center_cone(spec, {0, 1, 2, 3});
  CHECK(c.size() == 4);
  CHECK(spec.dimension() - c.size() == 6);
  const Fan y = projectivized_split_bundle(spec);
  CHECK(y.is_face(c));
  CHECK_THROWS_AS((void)subbundle_center_cone(spec, {}), PreconditionError);
  CHECK_THROWS_AS((void)subbundle_center_cone(spec, {0, 1, 2, 3, 4, 5}), PreconditionError);

  const auto p = build_prop1_pair(3);
  CHECK(p.y.dim() == 6);
  CHECK(p.y.dim() - p.center.size() == 3);
  const auto fam = build_family_pair(5, 1, 4, 2);
  CHECK(fam.y.dim() == 10);
  CHECK(fam.center.size() == 4);
}

TEST_CASE("star subdivision examples") {
  const auto b = star_subdivision(projective_space(2), {0, 1});
  CHECK(b.e_ray == 3);
  CHECK(b.fan_x.ray(3) == LatticeVector{1, 1});
  CHECK(b.fan_x.num_max_cones() == 4);
  CHECK(validate_fan(b.fan_x).ok());
  CHECK(shape(b.fan_x) == shape(hirzebruch(1)));

  const auto pt = star_subdivision(projective_space(3), {0, 1, 2});
  CHECK(validate_fan(pt.fan_x).ok());
  CHECK(fano_index(pt.fan_x) == 2);
  CHECK(picard_rank(pt.fan_x) == 2);

  const auto p = build_prop1_pair(3);
  const auto x6 = star_subdivision(p.y, p.center);
  CHECK(validate_fan(x6.fan_x).ok());
  CHECK(pseudo_index(x6.fan_x) == 2);
  CHECK(picard_rank(x6.fan_x) == 3);
}

TEST_CASE("star subdivision cone count") {
  const Fan y = projective_space(4);
  for (const Cone& s : std::vector<Cone>{{0, 1}, {0, 1, 2}, {0, 1, 2, 3}}) {
    const auto b = star_subdivision(y, s);
    std::size_t containing = 0;
    for (const auto& c : y.max_cones()) containing += std::includes(c.begin(), c.end(), s.begin(), s.end());
    CHECK(b.fan_x.num_max_cones() == y.num_max_cones() - containing + containing * s.size());
    CHECK(validate_fan(b.fan_x).ok());
    CHECK(b.center == s);
  }
}

TEST_CASE("star subdivision errors") {
  const Fan y = projective_space(3);
  CHECK_THROWS_AS((void)star_subdivision(y, {0}), DivisorialCenterError);
  CHECK_THROWS_AS((void)star_subdivision(y, {}), DivisorialCenterError);
  CHECK_THROWS_AS((void)star_subdivision(y, {0, 0}), PreconditionError);
  CHECK_THROWS_AS((void)star_subdivision(y, {0, 9}), PreconditionError);
  CHECK_THROWS_AS((void)star_subdivision(y, {0, 1, 2, 3}), PreconditionError);
  const Fan sq = product(projective_space(1), projective_space(1));
  CHECK_THROWS_AS((void)star_subdivision(sq, {0, 1}), PreconditionError);
}

TEST_CASE("pullback examples") {
  const auto pt = star_subdivision(projective_space(3), {0, 1, 2});
  const auto pk = pullback_divisor(pt, ToricDivisor::anticanonical(pt.source));
  CHECK(pk.coeffs == std::vector<Integer>{1, 1, 1, 1, 3});
  CHECK(pullback_divisor(pt, ToricDivisor::zero(pt.source)) == ToricDivisor::zero(pt.fan_x));
  CHECK(exceptional_divisor(pt).coeffs == std::vector<Integer>{0, 0, 0, 0, 1});
  CHECK_THROWS_AS((void)pullback_divisor(pt, ToricDivisor::zero(pt.fan_x)), InvalidInput);
}

TEST_CASE("discrepancy identity on faces of small fans") {
  for (const Fan& y : fano_pool()) {
    for (const auto& cone : y.max_cones()) {
      for (std::size_t mask = 0; mask < (1u << cone.size()); ++mask) {
        Cone s;
        for (std::size_t i = 0; i < cone.size(); ++i)
          if (mask >> i & 1) s.push_back(cone[i]);
        if (s.size() < 2) continue;
        const auto b = star_subdivision(y, s);
        ToricDivisor lhs = pullback_divisor(b, ToricDivisor::anticanonical(y));
        lhs += Integer(-static_cast<long>(s.size() - 1)) * exceptional_divisor(b);
        CHECK(lhs == ToricDivisor::anticanonical(b.fan_x));
        CHECK(check_blowup_identities(y, s).ok());
      }
    }
  }
}

TEST_CASE("pullback degree vanishes exactly on contracted curves") {
  const auto p = build_prop1_pair(3);
  const auto b = star_subdivision(p.y, p.center);
  const auto pk = pullback_divisor(b, ToricDivisor::anticanonical(p.y));
  const auto e = exceptional_divisor(b);
  const std::size_t n = p.y.dim();
  std::size_t contracted = 0;
  for (const auto& rel : wall_relations(b.fan_x)) {
    const auto& rays = rel.wall.rays;
    bool is_contracted = false;
    if (std::find(rays.begin(), rays.end(), b.e_ray) != rays.end()) {
      std::set<std::size_t> image(b.center.begin(), b.center.end());
      for (auto r : rays)
        if (r != b.e_ray) image.insert(r);
      is_contracted = image.size() == n;
    }
    const Integer deg = divisor_degree(rel, pk);
    if (is_contracted) {
      ++contracted;
      CHECK(deg == 0);
      CHECK(divisor_degree(rel, e) == -1);
    } else {
      CHECK(deg > 0);
    }
  }
  CHECK(contracted > 0);
}
