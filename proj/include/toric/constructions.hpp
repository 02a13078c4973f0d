#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "toric/errors.hpp"
#include "toric/fan.hpp"
#include "toric/invariants.hpp"

namespace toric {

/// Blow-up center of dimension one: the star subdivision would be the
/// identity, so it is refused.
class DivisorialCenterError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// P(O(d_0) + ... + O(d_k)) over P^{a_1} x ... x P^{a_t}; twists[j][l] is the
/// degree of summand j on base factor l, with row 0 identically zero.
struct BundleSpec {
  std::vector<std::size_t> base_dims;
  std::vector<std::vector<Integer>> twists;

  [[nodiscard]] std::size_t fiber_rank() const noexcept { return twists.size(); }
  [[nodiscard]] std::size_t base_dimension() const noexcept;
  [[nodiscard]] std::size_t dimension() const noexcept;
  /// Throws PreconditionError if the spec is malformed.
  void check() const;

  friend bool operator==(const BundleSpec&, const BundleSpec&) = default;
};

[[nodiscard]] BundleSpec bundle_spec_from_json(const nlohmann::json& j);
[[nodiscard]] nlohmann::json to_json(const BundleSpec& s);

/// Fan of P^n: rays e_1..e_n, -(e_1+...+e_n); cones omit one ray each.
[[nodiscard]] Fan projective_space(std::size_t n);

/// Fan of the product: rays of f then rays of g, in block coordinates.
[[nodiscard]] Fan product(const Fan& f, const Fan& g);

/// Ray layout: for each base factor its a_l coordinate rays followed by its
/// lifted minus-sum ray; then the fiber rays f_0, f_1, ..., f_k, where f_j
/// (j >= 1) is the j-th fiber basis vector and f_0 = -(f_1+...+f_k). The
/// minus-sum ray of factor l carries fiber part -sum_j twists[j][l] * f_j,
/// so P(E) is the bundle of lines in E (e.g. P(O^r + O(d)^s) over P^a is
/// Fano iff a >= r*d).
[[nodiscard]] Fan projectivized_split_bundle(const BundleSpec& spec);

/// Index of fiber ray f_j (homogeneous fiber coordinate x_j) in the bundle fan.
[[nodiscard]] std::size_t bundle_fiber_ray(const BundleSpec& spec, std::size_t summand);

/// Cone whose orbit closure is P(F), F = the summands not listed in
/// `dropped_summands`. Rejects empty or full subsets.
[[nodiscard]] Cone subbundle_center_cone(const BundleSpec& spec, const std::vector<std::size_t>& dropped_summands);

struct BlowupResult {
  Fan fan_x;
  std::size_t e_ray = 0;
  Cone center;
  Fan source;
};

/// Star subdivision of f at sigma (blow-up along the orbit closure V(sigma)).
/// The new ray is appended last.
[[nodiscard]] BlowupResult star_subdivision(const Fan& f, const Cone& sigma);

/// pi^* d: old coefficients unchanged, the exceptional ray gets the sum of
/// d over the center's rays.
[[nodiscard]] ToricDivisor pullback_divisor(const BlowupResult& b, const ToricDivisor& d);
/// Indicator divisor of the exceptional ray.
[[nodiscard]] ToricDivisor exceptional_divisor(const BlowupResult& b);

}  // namespace toric
