#include "toric/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "toric/fan_io.hpp"

namespace toric {

std::size_t BundleSpec::base_dimension() const noexcept {
  return std::accumulate(base_dims.begin(), base_dims.end(), std::size_t{0});
}

std::size_t BundleSpec::dimension() const noexcept {
  return base_dimension() + (twists.empty() ? 0 : twists.size() - 1);
}

void BundleSpec::check() const {
  if (base_dims.empty()) throw PreconditionError("bundle spec: base must have at least one factor");
  for (auto a : base_dims) {
    if (a == 0) throw PreconditionError("bundle spec: base factor dimensions must be positive");
  }
  if (twists.size() < 2) throw PreconditionError("bundle spec: fiber rank must be at least 2");
  for (std::size_t j = 0; j < twists.size(); ++j) {
    if (twists[j].size() != base_dims.size()) {
      throw PreconditionError("bundle spec: twist row " + std::to_string(j) + " has " +
                              std::to_string(twists[j].size()) + " entries, expected " +
                              std::to_string(base_dims.size()));
    }
  }
  for (const auto& t : twists[0]) {
    if (!t.is_zero()) throw PreconditionError("bundle spec: twist row 0 must be zero (normalization)");
  }
}

BundleSpec bundle_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("bundle spec: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "base_dims" && key != "twists") throw InvalidInput("bundle spec: unknown key \"" + key + "\"");
  }
  if (!j.contains("base_dims") || !j["base_dims"].is_array()) throw InvalidInput("bundle spec: base_dims must be an array");
  if (!j.contains("twists") || !j["twists"].is_array()) throw InvalidInput("bundle spec: twists must be an array");
  BundleSpec s;
  for (const auto& a : j["base_dims"]) {
    if (!a.is_number_integer() || a.get<std::int64_t>() <= 0) throw InvalidInput("bundle spec: base_dims entries must be positive integers");
    s.base_dims.push_back(a.get<std::size_t>());
  }
  for (const auto& row : j["twists"]) {
    if (!row.is_array()) throw InvalidInput("bundle spec: each twist row must be an array");
    std::vector<Integer> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw InvalidInput("bundle spec: twists must be integers");
      r.emplace_back(x.get<std::int64_t>());
    }
    s.twists.push_back(std::move(r));
  }
  return s;
}

nlohmann::json to_json(const BundleSpec& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : s.twists) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return {{"base_dims", s.base_dims}, {"twists", std::move(rows)}};
}

Fan projective_space(std::size_t n) {
  if (n < 1) throw PreconditionError("projective_space: dimension must be at least 1");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, Integer(-1));
  std::vector<Cone> cones;
  for (std::size_t omit = 0; omit <= n; ++omit) {
    Cone c;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i != omit) c.push_back(i);
    }
    cones.push_back(std::move(c));
  }
  return Fan(n, std::move(rays), std::move(cones));
}

Fan product(const Fan& f, const Fan& g) {
  if (f.dim() == 0 || g.dim() == 0) throw PreconditionError("product: both factors must have positive dimension");
  const std::size_t n = f.dim() + g.dim();
  std::vector<LatticeVector> rays;
  rays.reserve(f.num_rays() + g.num_rays());
  for (const auto& r : f.rays()) {
    LatticeVector v(n);
    std::copy(r.begin(), r.end(), v.begin());
    rays.push_back(std::move(v));
  }
  for (const auto& r : g.rays()) {
    LatticeVector v(n);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(f.dim()));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  cones.reserve(f.num_max_cones() * g.num_max_cones());
  for (const auto& a : f.max_cones()) {
    for (const auto& b : g.max_cones()) {
      Cone c = a;
      for (auto i : b) c.push_back(i + f.num_rays());
      cones.push_back(std::move(c));
    }
  }
  return Fan(n, std::move(rays), std::move(cones));
}

std::size_t bundle_fiber_ray(const BundleSpec& spec, std::size_t summand) {
  if (summand >= spec.fiber_rank()) throw PreconditionError("bundle_fiber_ray: summand index out of range");
  return spec.base_dimension() + spec.base_dims.size() + summand;
}

Fan projectivized_split_bundle(const BundleSpec& spec) {
  spec.check();
  const std::size_t base_n = spec.base_dimension();
  const std::size_t k = spec.fiber_rank() - 1;
  const std::size_t n = base_n + k;

  std::vector<LatticeVector> rays;
  std::vector<std::size_t> block_start;  // first ray index of each base factor
  std::size_t coord = 0;
  for (std::size_t l = 0; l < spec.base_dims.size(); ++l) {
    const std::size_t a = spec.base_dims[l];
    block_start.push_back(rays.size());
    for (std::size_t i = 0; i < a; ++i) {
      LatticeVector e(n);
      e[coord + i] = 1;
      rays.push_back(std::move(e));
    }
    LatticeVector minus(n);
    for (std::size_t i = 0; i < a; ++i) minus[coord + i] = -1;
    for (std::size_t j = 1; j <= k; ++j) minus[base_n + j - 1] = -spec.twists[j][l];
    rays.push_back(std::move(minus));
    coord += a;
  }
  const std::size_t fiber_start = rays.size();
  {
    LatticeVector f0(n);
    for (std::size_t j = 1; j <= k; ++j) f0[base_n + j - 1] = -1;
    rays.push_back(std::move(f0));
    for (std::size_t j = 1; j <= k; ++j) {
      LatticeVector fj(n);
      fj[base_n + j - 1] = 1;
      rays.push_back(std::move(fj));
    }
  }

  // One omitted ray per base factor and one omitted fiber ray, odometer order.
  std::vector<std::size_t> omit(spec.base_dims.size(), 0);
  std::vector<Cone> cones;
  for (;;) {
    for (std::size_t q = 0; q <= k; ++q) {
      Cone c;
      c.reserve(n);
      for (std::size_t l = 0; l < spec.base_dims.size(); ++l) {
        for (std::size_t i = 0; i <= spec.base_dims[l]; ++i) {
          if (i != omit[l]) c.push_back(block_start[l] + i);
        }
      }
      for (std::size_t j = 0; j <= k; ++j) {
        if (j != q) c.push_back(fiber_start + j);
      }
      cones.push_back(std::move(c));
    }
    std::size_t l = spec.base_dims.size();
    while (l > 0) {
      --l;
      if (++omit[l] <= spec.base_dims[l]) break;
      omit[l] = 0;
      if (l == 0) return Fan(n, std::move(rays), std::move(cones));
    }
  }
}

Cone subbundle_center_cone(const BundleSpec& spec, const std::vector<std::size_t>& dropped_summands) {
  spec.check();
  Cone c;
  for (auto j : dropped_summands) c.push_back(bundle_fiber_ray(spec, j));
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  if (c.empty()) throw PreconditionError("subbundle_center_cone: no summand dropped (Z would be all of Y)");
  if (c.size() >= spec.fiber_rank()) throw PreconditionError("subbundle_center_cone: every summand dropped (Z would be empty)");
  return c;
}

BlowupResult star_subdivision(const Fan& f, const Cone& sigma) {
  Cone s = sigma;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw PreconditionError("star_subdivision: repeated ray in center cone");
  for (auto i : s) {
    if (i >= f.num_rays()) throw PreconditionError("star_subdivision: ray index " + std::to_string(i) + " out of range");
  }
  if (s.size() < 2) {
    throw DivisorialCenterError("star_subdivision: center cone of dimension " + std::to_string(s.size()) +
                                " is divisorial; the blow-up would be the identity");
  }
  if (!f.is_face(s)) throw PreconditionError("star_subdivision: center " + to_json(s).dump() + " is not a face of the fan");

  LatticeVector e(f.dim());
  for (auto i : s) {
    for (std::size_t c = 0; c < f.dim(); ++c) e[c] += f.ray(i)[c];
  }
  e = primitive_vector(e);

  std::vector<LatticeVector> rays = f.rays();
  const std::size_t e_ray = rays.size();
  rays.push_back(std::move(e));

  std::vector<Cone> cones;
  for (const auto& cone : f.max_cones()) {
    if (!std::includes(cone.begin(), cone.end(), s.begin(), s.end())) {
      cones.push_back(cone);
      continue;
    }
    for (auto drop : s) {
      Cone c;
      c.reserve(cone.size());
      for (auto i : cone) {
        if (i != drop) c.push_back(i);
      }
      c.push_back(e_ray);
      cones.push_back(std::move(c));
    }
  }
  return BlowupResult{Fan(f.dim(), std::move(rays), std::move(cones)), e_ray, s, f};
}

ToricDivisor pullback_divisor(const BlowupResult& b, const ToricDivisor& d) {
  if (d.coeffs.size() != b.source.num_rays()) {
    throw InvalidInput("pullback_divisor: divisor has " + std::to_string(d.coeffs.size()) +
                       " coefficients, source fan has " + std::to_string(b.source.num_rays()) + " rays");
  }
  ToricDivisor out = d;
  Integer e;
  for (auto i : b.center) e += d.coeffs[i];
  out.coeffs.push_back(e);
  return out;
}

ToricDivisor exceptional_divisor(const BlowupResult& b) { return ToricDivisor::prime(b.fan_x, b.e_ray); }

}  // namespace toric
