#include "toric/invariants.hpp"

#include <algorithm>

#include "toric/errors.hpp"
#include "toric/fan_io.hpp"

namespace toric {

ToricDivisor ToricDivisor::anticanonical(const Fan& f) { return {std::vector<Integer>(f.num_rays(), Integer(1))}; }

ToricDivisor ToricDivisor::zero(const Fan& f) { return {std::vector<Integer>(f.num_rays())}; }

ToricDivisor ToricDivisor::prime(const Fan& f, std::size_t ray) {
  if (ray >= f.num_rays()) throw InvalidInput("ToricDivisor::prime: ray index out of range");
  ToricDivisor d = zero(f);
  d.coeffs[ray] = 1;
  return d;
}

ToricDivisor& ToricDivisor::operator+=(const ToricDivisor& o) {
  if (o.coeffs.size() != coeffs.size()) throw InvalidInput("ToricDivisor: length mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

ToricDivisor operator*(const Integer& k, ToricDivisor d) {
  for (auto& c : d.coeffs) c *= k;
  return d;
}

namespace {

WallRelation relation_in_basis(const Fan& f, const Wall& w, const IntMatrix& inverse) {
  const Cone& cone = f.max_cone(w.adjacent[0]);
  const LatticeVector coords = inverse.apply(f.ray(w.extra_rays[1]));
  WallRelation rel{w, {}};
  rel.coeffs.reserve(w.rays.size());
  for (std::size_t pos = 0; pos < cone.size(); ++pos) {
    if (cone[pos] == w.extra_rays[0]) {
      if (coords[pos] != Integer(-1)) {
        throw StructuralError("wall " + to_json(w.rays).dump() + ": coefficient of u is " + coords[pos].to_string() +
                              ", expected -1 (not a convex smooth fan at this wall)");
      }
    } else {
      rel.coeffs.push_back(-coords[pos]);
    }
  }
  return rel;
}

IntMatrix cone_columns(const Fan& f, const Cone& c) {
  IntMatrix m(f.dim(), c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (std::size_t i = 0; i < f.dim(); ++i) m(i, j) = f.ray(c[j])[i];
  }
  return m;
}

void check_divisor(const Fan& f, const ToricDivisor& d) {
  if (d.coeffs.size() != f.num_rays()) {
    throw InvalidInput("divisor has " + std::to_string(d.coeffs.size()) + " coefficients, fan has " +
                       std::to_string(f.num_rays()) + " rays");
  }
}

}  // namespace

WallRelation wall_relation(const Fan& f, const Wall& w) {
  auto inv = unimodular_inverse(cone_columns(f, f.max_cone(w.adjacent[0])));
  if (!inv) throw StructuralError("maximal cone " + std::to_string(w.adjacent[0]) + " is not unimodular");
  return relation_in_basis(f, w, *inv);
}

std::vector<WallRelation> wall_relations(const Fan& f) {
  const auto walls = enumerate_walls(f);
  const ConeBases bases(f);
  std::vector<WallRelation> out;
  out.reserve(walls.size());
  for (const auto& w : walls) out.push_back(relation_in_basis(f, w, bases.inverse(w.adjacent[0])));
  return out;
}

Integer anticanonical_degree(const WallRelation& rel) {
  Integer deg(2);
  for (const auto& a : rel.coeffs) deg += a;
  return deg;
}

Integer anticanonical_degree(const Fan& f, const Wall& w) { return anticanonical_degree(wall_relation(f, w)); }

Integer divisor_degree(const WallRelation& rel, const ToricDivisor& d) {
  const Wall& w = rel.wall;
  for (auto i : {w.extra_rays[0], w.extra_rays[1]}) {
    if (i >= d.coeffs.size()) throw InvalidInput("divisor_degree: divisor shorter than the fan's ray list");
  }
  Integer deg = d.coeffs[w.extra_rays[0]] + d.coeffs[w.extra_rays[1]];
  for (std::size_t i = 0; i < w.rays.size(); ++i) {
    if (w.rays[i] >= d.coeffs.size()) throw InvalidInput("divisor_degree: divisor shorter than the fan's ray list");
    deg += rel.coeffs[i] * d.coeffs[w.rays[i]];
  }
  return deg;
}

Integer divisor_degree(const Fan& f, const ToricDivisor& d, const Wall& w) {
  check_divisor(f, d);
  return divisor_degree(wall_relation(f, w), d);
}

bool is_fano(const Fan& f) {
  for (const auto& rel : wall_relations(f)) {
    if (anticanonical_degree(rel).sign() <= 0) return false;
  }
  return true;
}

Integer pseudo_index(const Fan& f) {
  const FanoReport r = fano_report(f);
  if (!r.is_fano) throw PreconditionError("pseudo_index: fan is not Fano (minimum wall degree " + r.min_degree.to_string() + ")");
  return *r.pseudo_index;
}

std::size_t picard_rank(const Fan& f) {
  if (f.num_rays() < f.dim()) throw PreconditionError("picard_rank: fewer rays than the dimension");
  return f.num_rays() - f.dim();
}

Integer divisibility_in_picard(const Fan& f, const ToricDivisor& d) {
  check_divisor(f, d);
  const std::size_t n = f.dim();
  IntMatrix pairing(f.num_rays(), n);  // m -> (<m, v_rho>)_rho
  for (std::size_t r = 0; r < f.num_rays(); ++r) {
    for (std::size_t i = 0; i < n; ++i) pairing(r, i) = f.ray(r)[i];
  }
  const SmithForm snf = smith_normal_form(pairing);
  for (const auto& e : snf.diagonal) {
    if (e != Integer(1)) {
      throw StructuralError("class group has torsion or the rays do not span: Smith invariant " + e.to_string());
    }
  }
  const LatticeVector coords = snf.u.apply(d.coeffs);
  Integer g;
  for (std::size_t i = n; i < coords.size(); ++i) g = gcd(g, coords[i]);
  return g;
}

Integer fano_index(const Fan& f) {
  if (!is_fano(f)) throw PreconditionError("fano_index: fan is not Fano");
  return divisibility_in_picard(f, ToricDivisor::anticanonical(f));
}

FanoReport fano_report(const Fan& f) {
  FanoReport rep;
  rep.picard_rank = picard_rank(f);
  const auto rels = wall_relations(f);
  if (rels.empty()) throw StructuralError("fan has no walls");
  bool first = true;
  for (const auto& rel : rels) {
    const Integer deg = anticanonical_degree(rel);
    ++rep.wall_degrees[deg];
    if (first || deg < rep.min_degree) {
      rep.min_degree = deg;
      rep.min_walls.clear();
      first = false;
    }
    if (deg == rep.min_degree) rep.min_walls.push_back(rel.wall.rays);
  }
  rep.is_fano = rep.min_degree.sign() > 0;
  if (rep.is_fano) {
    rep.pseudo_index = rep.min_degree;
    rep.fano_index = divisibility_in_picard(f, ToricDivisor::anticanonical(f));
  }
  return rep;
}

nlohmann::json to_json(const FanoReport& r) {
  using nlohmann::json;
  json degrees = json::object();
  for (const auto& [deg, count] : r.wall_degrees) degrees[deg.to_string()] = count;
  json walls = json::array();
  for (const auto& w : r.min_walls) walls.push_back(to_json(w));
  return json{{"is_fano", r.is_fano},
              {"pseudo_index", r.pseudo_index ? to_json(*r.pseudo_index) : json(nullptr)},
              {"fano_index", r.fano_index ? to_json(*r.fano_index) : json(nullptr)},
              {"picard_rank", r.picard_rank},
              {"wall_degrees", std::move(degrees)},
              {"min_walls", std::move(walls)}};
}

}  // namespace toric
