#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "toric/fan.hpp"

namespace toric {

/// The relation u + u' + sum_i coeffs[i] * v_i = 0 around a wall, where v_i
/// are wall.rays and (u, u') = wall.extra_rays.
struct WallRelation {
  Wall wall;
  std::vector<Integer> coeffs;

  friend bool operator==(const WallRelation&, const WallRelation&) = default;
};

/// Torus-invariant divisor sum_rho coeffs[rho] * D_rho.
struct ToricDivisor {
  std::vector<Integer> coeffs;

  /// -K: the all-ones divisor.
  [[nodiscard]] static ToricDivisor anticanonical(const Fan& f);
  [[nodiscard]] static ToricDivisor zero(const Fan& f);
  /// The prime divisor D_rho of a single ray.
  [[nodiscard]] static ToricDivisor prime(const Fan& f, std::size_t ray);

  ToricDivisor& operator+=(const ToricDivisor& o);
  friend ToricDivisor operator+(ToricDivisor a, const ToricDivisor& b) { return a += b; }
  friend ToricDivisor operator*(const Integer& k, ToricDivisor d);
  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

struct FanoReport {
  bool is_fano = false;
  std::optional<Integer> pseudo_index;
  std::optional<Integer> fano_index;
  std::size_t picard_rank = 0;
  /// Smallest anticanonical wall degree (reported for non-Fano fans too).
  Integer min_degree;
  /// Ray sets of the walls attaining min_degree, ascending.
  std::vector<Cone> min_walls;
  /// degree -> number of walls.
  std::map<Integer, std::size_t> wall_degrees;

  friend bool operator==(const FanoReport&, const FanoReport&) = default;
};

[[nodiscard]] WallRelation wall_relation(const Fan& f, const Wall& w);
/// All wall relations of a smooth complete fan, in enumerate_walls order.
[[nodiscard]] std::vector<WallRelation> wall_relations(const Fan& f);

/// -K . C_w = 2 + sum of the relation coefficients.
[[nodiscard]] Integer anticanonical_degree(const Fan& f, const Wall& w);
[[nodiscard]] Integer anticanonical_degree(const WallRelation& rel);
/// D . C_w = c_u + c_u' + sum_i a_i c_{v_i}.
[[nodiscard]] Integer divisor_degree(const Fan& f, const ToricDivisor& d, const Wall& w);
[[nodiscard]] Integer divisor_degree(const WallRelation& rel, const ToricDivisor& d);

/// Toric Kleiman test: -K is positive on every invariant curve. Valid for the
/// projective fans this library builds.
[[nodiscard]] bool is_fano(const Fan& f);
/// Minimum anticanonical degree over invariant curves; PreconditionError when
/// the fan is not Fano.
[[nodiscard]] Integer pseudo_index(const Fan& f);
/// Largest m with -K divisible by m in Pic; PreconditionError when not Fano.
[[nodiscard]] Integer fano_index(const Fan& f);
/// Divisibility of the class of d in Pic = Z^rays / M (gcd of its coordinates
/// in a basis of the free cokernel, from a Smith normal form).
[[nodiscard]] Integer divisibility_in_picard(const Fan& f, const ToricDivisor& d);
[[nodiscard]] std::size_t picard_rank(const Fan& f);

[[nodiscard]] FanoReport fano_report(const Fan& f);

[[nodiscard]] nlohmann::json to_json(const FanoReport& r);

}  // namespace toric
