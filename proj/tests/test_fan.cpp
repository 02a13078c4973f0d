#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "toric/constructions.hpp"
#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/fan_io.hpp"

using namespace toric;
using fixtures::make_fan;
using nlohmann::json;

namespace {

bool has_defect(const ValidationReport& r, const std::string& subject) {
  for (const auto& d : r.defects)
    if (d.subject == subject) return true;
  return false;
}

}  // namespace

TEST_CASE("validate: projective plane") {
  const auto r = validate_fan(projective_space(2));
  CHECK(r.well_formed);
  CHECK(r.smooth);
  CHECK(r.complete);
  CHECK(r.defects.empty());
}

TEST_CASE("validate: non-unimodular cone") {
  const Fan f = make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  const auto r = validate_fan(f);
  CHECK(r.well_formed);
  CHECK_FALSE(r.smooth);
  CHECK(r.complete);
  REQUIRE(has_defect(r, "cone"));
  bool det2 = false;
  for (const auto& d : r.defects) det2 |= d.reason.find("|det| = 2") != std::string::npos;
  CHECK(det2);
}

TEST_CASE("validate: missing cone leaves the fan incomplete") {
  const Fan f = make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
  const auto r = validate_fan(f);
  CHECK(r.well_formed);
  CHECK(r.smooth);
  CHECK_FALSE(r.complete);
  CHECK_THROWS_AS((void)enumerate_walls(f), StructuralError);
}

TEST_CASE("validate: overlapping cones are not complete") {
  // four rays of a square, cones covering the upper half plane twice
  const Fan f = make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const auto r = validate_fan(f);
  CHECK_FALSE(r.ok());
}

TEST_CASE("validate: cone pair glued on one side only") {
  // two cones on the same side of their common wall
  const Fan f = make_fan(2, {{1, 0}, {1, 1}, {0, 1}, {-1, -1}}, {{0, 2}, {1, 2}, {0, 3}, {2, 3}});
  CHECK_FALSE(validate_fan(f).complete);
}

TEST_CASE("validate: malformed data") {
  SUBCASE("wrong ray length") {
    const Fan f = make_fan(2, {{1, 0}, {0, 1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
    const auto r = validate_fan(f);
    CHECK_FALSE(r.well_formed);
    CHECK_FALSE(r.smooth);
    CHECK_FALSE(r.complete);
  }
  SUBCASE("zero ray") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}})).well_formed);
  }
  SUBCASE("non-primitive ray") {
    CHECK_FALSE(validate_fan(make_fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}})).well_formed);
  }
  SUBCASE("duplicate ray") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {1, 0}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}})).well_formed);
  }
  SUBCASE("index out of range") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 5}, {2, 0}})).well_formed);
  }
  SUBCASE("wrong cone size") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2}})).well_formed);
  }
  SUBCASE("repeated index") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 1}, {2, 0}})).well_formed);
  }
  SUBCASE("duplicate cone") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 0}, {1, 2}, {2, 0}})).well_formed);
  }
  SUBCASE("unused ray") {
    CHECK_FALSE(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}, {1, 1}}, {{0, 1}, {1, 2}, {2, 0}})).well_formed);
  }
  SUBCASE("empty fan") {
    CHECK_FALSE(validate_fan(Fan()).well_formed);
  }
}

TEST_CASE("validate is deterministic and idempotent") {
  const Fan f = product(projective_space(2), projective_space(1));
  const auto a = validate_fan(f);
  const auto b = validate_fan(f);
  CHECK(a == b);
  CHECK(a.ok());
  const Fan bad = make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
  CHECK(validate_fan(bad, 99) == validate_fan(bad, 99));
}

TEST_CASE("enumerate_walls counts") {
  CHECK(enumerate_walls(projective_space(2)).size() == 3);
  CHECK(enumerate_walls(projective_space(3)).size() == 6);
  CHECK(enumerate_walls(product(projective_space(1), projective_space(1))).size() == 4);
  for (const Fan& f : {projective_space(4), product(projective_space(2), projective_space(2)), fixtures::hirzebruch(3)}) {
    const auto walls = enumerate_walls(f);
    CHECK(walls.size() == f.dim() * f.num_max_cones() / 2);
    for (const auto& w : walls) {
      CHECK(w.rays.size() == f.dim() - 1);
      CHECK(w.adjacent[0] < w.adjacent[1]);
      for (int k = 0; k < 2; ++k) {
        Cone c = w.rays;
        c.push_back(w.extra_rays[k]);
        std::sort(c.begin(), c.end());
        CHECK(c == f.max_cone(w.adjacent[k]));
      }
    }
  }
}

TEST_CASE("non-smooth fan has no cone bases") {
  const Fan f = make_fan(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(ConeBases{f}, StructuralError);
}

TEST_CASE("cone bases read off coordinates") {
  const Fan f = fixtures::hirzebruch(1);
  const ConeBases b(f);
  for (std::size_t c = 0; c < f.num_max_cones(); ++c) {
    for (std::size_t pos = 0; pos < 2; ++pos) {
      const auto coords = b.coordinates(c, f.ray(f.max_cone(c)[pos]));
      for (std::size_t q = 0; q < 2; ++q) CHECK(coords[q] == (q == pos ? 1 : 0));
    }
  }
}

TEST_CASE("is_face") {
  const Fan f = projective_space(3);
  CHECK(f.is_face({0, 1}));
  CHECK(f.is_face({0, 1, 2}));
  CHECK_FALSE(f.is_face({0, 1, 2, 3}));
  CHECK(f.is_face({}));
}

TEST_CASE("fan json round trip") {
  const Fan f = fixtures::hirzebruch(2);
  CHECK(fan_from_json(to_json(f)) == f);
  CHECK(to_json(f)["max_cones"][3] == json::array({0, 3}));
}

TEST_CASE("fan json errors") {
  const json good = json::parse(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[2,0]]})");
  CHECK_NOTHROW((void)fan_from_json(good));
  auto bad = good;
  bad["extra"] = 1;
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  bad = good;
  bad.erase("rays");
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  bad = good;
  bad["dim"] = 0;
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  bad = good;
  bad["rays"][0][0] = 1.5;
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  bad = good;
  bad["rays"][0][0] = "1";
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  bad = good;
  bad["max_cones"][0][0] = -1;
  CHECK_THROWS_AS((void)fan_from_json(bad), InvalidInput);
  CHECK_THROWS_AS((void)fan_from_json(json::array()), InvalidInput);
  CHECK_THROWS_AS((void)read_fan_file("/nonexistent/fan.json"), InvalidInput);
}

TEST_CASE("validation report json") {
  const auto j = to_json(validate_fan(make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}})));
  CHECK(j["well_formed"] == true);
  CHECK(j["complete"] == false);
  CHECK(j["defects"].is_array());
  CHECK_FALSE(j["defects"].empty());
}
