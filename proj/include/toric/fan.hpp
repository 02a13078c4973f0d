#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

/// A cone given by the indices of its ray generators, ascending.
using Cone = std::vector<std::size_t>;

/// Simplicial fan in Z^dim described by its rays and its maximal cones.
///
/// The constructor only sorts each cone's index list; it performs no
/// validation, so arbitrary candidate data can be handed to validate_fan.
class Fan {
 public:
  Fan() = default;
  Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  [[nodiscard]] const LatticeVector& ray(std::size_t i) const { return rays_.at(i); }
  [[nodiscard]] std::size_t num_rays() const noexcept { return rays_.size(); }
  [[nodiscard]] const std::vector<Cone>& max_cones() const noexcept { return cones_; }
  [[nodiscard]] const Cone& max_cone(std::size_t i) const { return cones_.at(i); }
  [[nodiscard]] std::size_t num_max_cones() const noexcept { return cones_.size(); }

  /// True when sub is contained in some maximal cone (i.e. spans a face).
  [[nodiscard]] bool is_face(const Cone& sub) const;

  friend bool operator==(const Fan&, const Fan&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
};

/// Codimension-one cone shared by two maximal cones; indexes one
/// torus-invariant curve.
struct Wall {
  Cone rays;                           // n-1 ray indices
  std::array<std::size_t, 2> adjacent;  // maximal-cone indices, ascending
  std::array<std::size_t, 2> extra_rays;  // extra_rays[k] = adjacent[k] \ rays

  friend bool operator==(const Wall&, const Wall&) = default;
};

struct Defect {
  std::string subject;  // "fan", "ray", "cone", "wall" or "sample"
  std::optional<std::size_t> index;
  std::string reason;

  friend bool operator==(const Defect&, const Defect&) = default;
};

struct ValidationReport {
  bool well_formed = false;
  bool smooth = false;
  bool complete = false;
  std::vector<Defect> defects;

  [[nodiscard]] bool ok() const noexcept { return well_formed && smooth && complete; }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x7041'5eedULL;
inline constexpr std::size_t kCompletenessSamples = 256;

[[nodiscard]] ValidationReport validate_fan(const Fan& f, std::uint64_t seed = kDefaultSeed,
                                            std::size_t samples = kCompletenessSamples);

/// Walls of a smooth complete fan, sorted by ray indices. Throws
/// StructuralError if some codimension-one face does not have exactly two
/// adjacent maximal cones.
[[nodiscard]] std::vector<Wall> enumerate_walls(const Fan& f);

/// Dual bases of every maximal cone of a smooth fan: for cone c, row i of
/// inverse(c) is the linear form that reads off the coefficient of the i-th
/// ray of c (in ascending index order).
class ConeBases {
 public:
  /// Throws StructuralError if some maximal cone is not unimodular.
  explicit ConeBases(const Fan& f);
  /// Wraps precomputed inverses (one per maximal cone, in cone order).
  static ConeBases from_inverses(std::vector<IntMatrix> inverses);

  [[nodiscard]] const IntMatrix& inverse(std::size_t cone) const { return inverses_.at(cone); }
  /// Coordinates of v in the ray basis of the given maximal cone.
  [[nodiscard]] LatticeVector coordinates(std::size_t cone, std::span<const Integer> v) const;
  /// Coefficient of the pos-th ray of the cone in the expansion of v.
  [[nodiscard]] Integer coordinate(std::size_t cone, std::size_t pos, std::span<const Integer> v) const;

 private:
  ConeBases() = default;
  std::vector<IntMatrix> inverses_;
};

}  // namespace toric
