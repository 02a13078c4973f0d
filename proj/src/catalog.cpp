#include "toric/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "toric/fan_io.hpp"

namespace toric {

using nlohmann::json;

BlowupPair build_prop1_pair(std::size_t m) {
  if (m < 2) throw DivisorialCenterError("build_prop1_pair: m must be at least 2 (m = 1 gives a divisorial center)");
  BundleSpec spec{{m}, std::vector<std::vector<Integer>>(m + 1, std::vector<Integer>{Integer(0)})};
  spec.twists[m][0] = 1;
  std::vector<std::size_t> trivial(m);
  for (std::size_t j = 0; j < m; ++j) trivial[j] = j;
  return BlowupPair{"prop1(m=" + std::to_string(m) + ")", json{{"m", m}}, projectivized_split_bundle(spec),
                    subbundle_center_cone(spec, trivial)};
}

BlowupPair build_family_pair(std::size_t a, std::size_t d, std::size_t r, std::size_t s) {
  if (a < 1 || d < 1 || s < 1) throw PreconditionError("build_family_pair: a, d, s must be positive");
  if (r < 2) throw DivisorialCenterError("build_family_pair: r must be at least 2 (r = 1 gives a divisorial center)");
  BundleSpec spec{{a}, {}};
  for (std::size_t j = 0; j < r; ++j) spec.twists.push_back({Integer(0)});
  for (std::size_t j = 0; j < s; ++j) spec.twists.push_back({Integer(d)});
  std::vector<std::size_t> trivial(r);
  for (std::size_t j = 0; j < r; ++j) trivial[j] = j;
  const std::string label = "family(a=" + std::to_string(a) + ",d=" + std::to_string(d) + ",r=" + std::to_string(r) +
                            ",s=" + std::to_string(s) + ")";
  return BlowupPair{label, json{{"a", a}, {"d", d}, {"r", r}, {"s", s}}, projectivized_split_bundle(spec),
                    subbundle_center_cone(spec, trivial)};
}

BlowupPair build_pspace_pair(std::size_t n, std::size_t k) {
  if (n < 2 || k + 2 > n) throw DivisorialCenterError("build_pspace_pair: need 0 <= k <= n-2");
  Cone center(n - k);
  for (std::size_t i = 0; i < center.size(); ++i) center[i] = i;
  return BlowupPair{"pspace(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")", json{{"n", n}, {"k", k}},
                    projective_space(n), center};
}

FamilyClosedForm family_closed_form(std::size_t a, std::size_t d, std::size_t r, std::size_t s) {
  const auto A = static_cast<std::int64_t>(a), D = static_cast<std::int64_t>(d);
  const auto R = static_cast<std::int64_t>(r), S = static_cast<std::int64_t>(s);
  FamilyClosedForm out{A >= R * D, A >= D, std::nullopt, std::nullopt};
  if (out.y_fano) out.i_y = Integer(std::min(R + S, 1 + A - R * D));
  if (out.x_fano) out.i_x = Integer(std::min({R - 1, S + 1, 1 + A - D}));
  return out;
}

TheoremFlags theorem_flags(std::size_t n, std::size_t dim_z, const FanoReport& y, const FanoReport& x) {
  TheoremFlags t;
  t.both_fano = y.is_fano && x.is_fano;
  if (!t.both_fano) return t;
  const auto N = static_cast<std::int64_t>(n);
  const auto Z = static_cast<std::int64_t>(dim_z);
  const std::int64_t iy = y.pseudo_index->to_int64();
  const std::int64_t ix = x.pseudo_index->to_int64();
  t.conclusion = ix <= iy;
  t.thm1_i = 2 * Z < N + iy - 1;
  t.boundary = 2 * Z == N + iy - 1;
  t.thm1_ii = t.boundary && iy >= 2;
  t.thm1_iii = 2 * Z < N;
  t.cor1_i = 3 * iy > N - 3;
  t.cor1_ii = 3 * iy == N - 3;
  t.cor2_i = N <= 5;
  t.cor2_ii = N == 6;
  return t;
}

namespace {

IdentityRecord identities_from(const BlowupResult& b, const FanoReport& ry, const FanoReport& rx) {
  IdentityRecord rec;
  rec.codim = b.center.size();
  const ToricDivisor expected = pullback_divisor(b, ToricDivisor::anticanonical(b.source)) +
                                Integer(-static_cast<std::int64_t>(rec.codim - 1)) * exceptional_divisor(b);
  rec.discrepancy = expected == ToricDivisor::anticanonical(b.fan_x);
  rec.picard_increment =
      b.fan_x.num_rays() == b.source.num_rays() + 1 && rx.picard_rank == ry.picard_rank + 1;
  if (ry.is_fano && rx.is_fano) {
    rec.expected_index = gcd(*ry.fano_index, Integer(rec.codim - 1));
    rec.gcd_index = *rx.fano_index == *rec.expected_index;
  }
  return rec;
}

}  // namespace

IdentityRecord check_blowup_identities(const Fan& y, const Cone& center) {
  const BlowupResult b = star_subdivision(y, center);
  return identities_from(b, fano_report(y), fano_report(b.fan_x));
}

CatalogEntry evaluate_pair(const BlowupPair& pair, std::uint64_t seed) {
  CatalogEntry e;
  e.label = pair.label;
  e.params = pair.params;
  e.n = pair.y.dim();
  e.dim_z = e.n - pair.center.size();
  const BlowupResult b = star_subdivision(pair.y, pair.center);
  e.rays_y = pair.y.num_rays();
  e.cones_y = pair.y.num_max_cones();
  e.rays_x = b.fan_x.num_rays();
  e.cones_x = b.fan_x.num_max_cones();
  e.valid_y = validate_fan(pair.y, seed).ok();
  e.valid_x = validate_fan(b.fan_x, seed).ok();
  e.report_y = fano_report(pair.y);
  e.report_x = fano_report(b.fan_x);
  e.identities = identities_from(b, e.report_y, e.report_x);
  e.theorem_flags = theorem_flags(e.n, e.dim_z, e.report_y, e.report_x);
  return e;
}

std::vector<BlowupPair> catalog_pairs(const CatalogLimits& limits) {
  std::vector<BlowupPair> pairs;
  for (std::size_t m = 2; m <= limits.m_max; ++m) pairs.push_back(build_prop1_pair(m));
  const std::size_t p = limits.family_max;
  for (std::size_t a = 1; a <= p; ++a) {
    for (std::size_t d = 1; d <= p; ++d) {
      for (std::size_t r = 2; r <= p; ++r) {
        for (std::size_t s = 1; s <= p; ++s) pairs.push_back(build_family_pair(a, d, r, s));
      }
    }
  }
  for (std::size_t n = 2; n <= limits.n_max; ++n) {
    for (std::size_t k = 0; k + 2 <= n; ++k) pairs.push_back(build_pspace_pair(n, k));
  }
  return pairs;
}

std::vector<CatalogEntry> evaluate_pairs(const std::vector<BlowupPair>& pairs, std::uint64_t seed) {
  std::vector<CatalogEntry> out(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      try {
        out[i] = evaluate_pair(pairs[i], seed);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, pairs.size());
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Catalog build_catalog(const CatalogLimits& limits) {
  Catalog c;
  c.limits = limits;
  std::vector<BlowupPair> pairs = catalog_pairs(limits);
  c.requested = pairs.size();
  if (pairs.size() > limits.max_entries) {
    pairs.resize(limits.max_entries);
    c.truncated = true;
  }
  c.entries = evaluate_pairs(pairs, limits.seed);
  return c;
}

json to_json(const IdentityRecord& r) {
  return json{{"codim", r.codim},
              {"discrepancy", r.discrepancy},
              {"picard_increment", r.picard_increment},
              {"gcd_index", r.gcd_index ? json(*r.gcd_index) : json(nullptr)},
              {"expected_index", r.expected_index ? to_json(*r.expected_index) : json(nullptr)}};
}

json to_json(const TheoremFlags& f) {
  return json{{"both_fano", f.both_fano}, {"conclusion", f.conclusion}, {"thm1_i", f.thm1_i},
              {"thm1_ii", f.thm1_ii},     {"thm1_iii", f.thm1_iii},     {"boundary", f.boundary},
              {"cor1_i", f.cor1_i},       {"cor1_ii", f.cor1_ii},       {"cor2_i", f.cor2_i},
              {"cor2_ii", f.cor2_ii}};
}

json to_json(const CatalogEntry& e) {
  return json{{"label", e.label},
              {"params", e.params},
              {"n", e.n},
              {"dim_z", e.dim_z},
              {"counts", {{"rays_y", e.rays_y}, {"cones_y", e.cones_y}, {"rays_x", e.rays_x}, {"cones_x", e.cones_x}}},
              {"valid_y", e.valid_y},
              {"valid_x", e.valid_x},
              {"report_y", to_json(e.report_y)},
              {"report_x", to_json(e.report_x)},
              {"identities", to_json(e.identities)},
              {"theorem_flags", to_json(e.theorem_flags)}};
}

std::string to_jsonl(const Catalog& c) {
  std::string out;
  for (const auto& e : c.entries) {
    out += to_json(e).dump();
    out += '\n';
  }
  if (c.truncated) {
    out += json{{"truncated", true}, {"emitted", c.entries.size()}, {"requested", c.requested}}.dump();
    out += '\n';
  }
  return out;
}

}  // namespace toric
