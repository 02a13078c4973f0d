#include "toric/suites.hpp"

#include <sstream>

namespace toric {

using nlohmann::json;

namespace {

constexpr const char* kOneSided =
    "property-based falsification over the generated catalog; a clean run does not certify the "
    "universally quantified statement";

std::string opt_string(const std::optional<Integer>& v) { return v ? v->to_string() : "-"; }

bool report_signature_equal(const FanoReport& a, const FanoReport& b) {
  return a.is_fano == b.is_fano && a.pseudo_index == b.pseudo_index && a.fano_index == b.fano_index &&
         a.picard_rank == b.picard_rank && a.wall_degrees == b.wall_degrees;
}

std::size_t param(const CatalogEntry& e, const char* key) { return e.params.at(key).get<std::size_t>(); }

}  // namespace

void SuiteReport::record(bool ok, const std::string& what_failed) {
  ++checked;
  if (ok) {
    ++passed;
  } else {
    ++failed;
    violations.push_back(what_failed);
  }
}

json to_json(const SuiteReport& r) {
  json j{{"suite", r.suite},           {"checked", r.checked},   {"passed", r.passed}, {"failed", r.failed},
         {"violations", r.violations}, {"observations", r.observations}};
  if (!r.scope.empty()) j["scope"] = r.scope;
  return j;
}

bool same_signature(const CatalogEntry& a, const CatalogEntry& b) {
  return a.n == b.n && a.dim_z == b.dim_z && a.rays_y == b.rays_y && a.cones_y == b.cones_y &&
         a.rays_x == b.rays_x && a.cones_x == b.cones_x && report_signature_equal(a.report_y, b.report_y) &&
         report_signature_equal(a.report_x, b.report_x);
}

bool matches_prop1_signature(const CatalogEntry& e) {
  if (e.n < 6 || e.n % 2 != 0 || e.dim_z * 2 != e.n) return false;
  if (e.report_y.pseudo_index != Integer(1) || e.report_x.pseudo_index != Integer(2)) return false;
  return same_signature(e, evaluate_pair(build_prop1_pair(e.n / 2)));
}

Prop1Check check_prop1(std::size_t m_max) {
  std::vector<BlowupPair> pairs;
  for (std::size_t m = 2; m <= m_max; ++m) pairs.push_back(build_prop1_pair(m));
  return check_prop1(evaluate_pairs(pairs, kDefaultSeed));
}

Prop1Check check_prop1(const std::vector<CatalogEntry>& entries) {
  Prop1Check out;
  out.report.suite = "prop1";
  for (const auto& e : entries) {
    if (!e.params.contains("m")) continue;
    Prop1Row row;
    row.m = param(e, "m");
    row.n = e.n;
    row.dim_z = e.dim_z;
    row.y = e.report_y;
    row.x = e.report_x;
    row.has_degree_two = e.report_x.wall_degrees.contains(Integer(2));
    row.has_degree_m_minus_one = e.report_x.wall_degrees.contains(Integer(row.m) - Integer(1));

    std::vector<std::string> bad;
    if (row.n != 2 * row.m) bad.push_back("dimension " + std::to_string(row.n));
    if (row.dim_z != row.m) bad.push_back("dim Z " + std::to_string(row.dim_z));
    if (!row.y.is_fano) bad.push_back("Y not Fano");
    if (!row.x.is_fano) bad.push_back("X not Fano");
    if (row.y.is_fano && *row.y.pseudo_index != Integer(1)) bad.push_back("i_Y = " + opt_string(row.y.pseudo_index));
    const Integer want_x = row.m == 2 ? Integer(1) : Integer(2);
    if (row.x.is_fano && *row.x.pseudo_index != want_x) {
      bad.push_back("i_X = " + opt_string(row.x.pseudo_index) + ", expected " + want_x.to_string());
    }
    if (!row.has_degree_two) bad.push_back("X has no wall of degree 2");
    if (!row.has_degree_m_minus_one) bad.push_back("X has no wall of degree m-1");
    std::string msg = e.label + ":";
    for (const auto& b : bad) msg += " " + b + ";";
    out.report.record(bad.empty(), msg);
    out.rows.push_back(std::move(row));
  }
  return out;
}

FamilyCheck check_family(std::size_t max_param) {
  CatalogLimits limits{0, max_param, 0, SIZE_MAX, kDefaultSeed};
  std::vector<BlowupPair> pairs = catalog_pairs(limits);
  return check_family(evaluate_pairs(pairs, kDefaultSeed));
}

FamilyCheck check_family(const std::vector<CatalogEntry>& entries) {
  FamilyCheck out;
  out.report.suite = "family";
  bool witness = false;
  for (const auto& e : entries) {
    if (!e.params.contains("a")) continue;
    FamilyRow row;
    row.a = param(e, "a");
    row.d = param(e, "d");
    row.r = param(e, "r");
    row.s = param(e, "s");
    row.n = e.n;
    row.dim_z = e.dim_z;
    row.y_fano = e.report_y.is_fano;
    row.x_fano = e.report_x.is_fano;
    row.i_y = e.report_y.pseudo_index;
    row.i_x = e.report_x.pseudo_index;
    row.expected = family_closed_form(row.a, row.d, row.r, row.s);

    std::vector<std::string> bad;
    if (row.n != row.a + row.r + row.s - 1) bad.push_back("dimension " + std::to_string(row.n));
    if (row.dim_z != row.a + row.s - 1) bad.push_back("dim Z " + std::to_string(row.dim_z));
    if (row.y_fano != row.expected.y_fano) bad.push_back(std::string("Y Fano = ") + (row.y_fano ? "yes" : "no"));
    if (row.x_fano != row.expected.x_fano) bad.push_back(std::string("X Fano = ") + (row.x_fano ? "yes" : "no"));
    if (row.y_fano && row.x_fano && row.expected.y_fano && row.expected.x_fano) {
      if (row.i_y != row.expected.i_y) bad.push_back("i_Y = " + opt_string(row.i_y) + " vs " + opt_string(row.expected.i_y));
      if (row.i_x != row.expected.i_x) bad.push_back("i_X = " + opt_string(row.i_x) + " vs " + opt_string(row.expected.i_x));
    }
    const bool region = row.r * row.d > row.a && row.a >= row.d;
    if (region) {
      if (!(row.x_fano && !row.y_fano)) bad.push_back("r*d > a >= d but not (X Fano, Y not Fano)");
      out.x_only_region.push_back(out.rows.size());
      if (row.a == 1 && row.d == 1 && row.r == 2 && row.s == 1) witness = true;
    }
    std::string msg = e.label + ":";
    for (const auto& b : bad) msg += " " + b + ";";
    out.report.record(bad.empty(), msg);
    out.rows.push_back(std::move(row));
  }
  out.report.observations.push_back("rows with r*d > a >= d (X Fano, Y not Fano): " +
                                    std::to_string(out.x_only_region.size()));
  if (!out.rows.empty()) {
    out.report.observations.push_back(std::string("witness (1,1,2,1) present: ") + (witness ? "yes" : "no"));
  }
  return out;
}

std::string Theorem1Verdict::describe() const {
  if (!flags.both_fano) return x_fano ? "Y not Fano" : "X not Fano";
  if (clauses.empty()) return boundary ? "boundary/no-clause" : "no-clause";
  std::string s = "clause";
  for (const auto& c : clauses) s += " (" + c + ")";
  s += flags.conclusion ? ": i_X <= i_Y holds" : ": VIOLATED";
  return s;
}

Theorem1Verdict theorem1_verdict(const CatalogEntry& e) {
  Theorem1Verdict v;
  v.flags = e.theorem_flags;
  v.x_fano = e.report_x.is_fano;
  if (v.flags.both_fano) {
    if (v.flags.thm1_i) v.clauses.emplace_back("i");
    if (v.flags.thm1_ii) v.clauses.emplace_back("ii");
    if (v.flags.thm1_iii) v.clauses.emplace_back("iii");
    v.boundary = v.flags.boundary;
  }
  return v;
}

Theorem1Verdict check_theorem1(const Fan& y, const Cone& center) {
  if (!is_fano(y)) throw PreconditionError("check_theorem1: Y is not Fano");
  return theorem1_verdict(evaluate_pair(BlowupPair{"adhoc", json::object(), y, center}));
}

SuiteReport check_theorem1_suite(const std::vector<CatalogEntry>& catalog) {
  SuiteReport rep;
  rep.suite = "theorem1";
  rep.scope = kOneSided;
  std::size_t clause_count[3] = {0, 0, 0};
  std::size_t no_clause = 0, skipped = 0;
  for (const auto& e : catalog) {
    const Theorem1Verdict v = theorem1_verdict(e);
    if (!v.flags.both_fano) {
      ++skipped;
      continue;
    }
    if (v.clauses.empty()) {
      ++no_clause;
      continue;
    }
    clause_count[0] += v.flags.thm1_i;
    clause_count[1] += v.flags.thm1_ii;
    clause_count[2] += v.flags.thm1_iii;
    rep.record(!v.violated(), e.label + ": " + v.describe() + " (i_Y = " + opt_string(e.report_y.pseudo_index) +
                                  ", i_X = " + opt_string(e.report_x.pseudo_index) + ")");
  }
  rep.observations.push_back("clause (i) applied: " + std::to_string(clause_count[0]));
  rep.observations.push_back("clause (ii) applied: " + std::to_string(clause_count[1]));
  rep.observations.push_back("clause (iii) applied: " + std::to_string(clause_count[2]));
  rep.observations.push_back("both Fano, no clause applies: " + std::to_string(no_clause));
  rep.observations.push_back("skipped (X or Y not Fano): " + std::to_string(skipped));
  return rep;
}

SuiteReport check_theorem2_boundary(const std::vector<CatalogEntry>& catalog) {
  SuiteReport rep;
  rep.suite = "theorem2";
  rep.scope = kOneSided;
  std::vector<std::string> exceptions;
  for (const auto& e : catalog) {
    const TheoremFlags& f = e.theorem_flags;
    if (!f.both_fano || !f.boundary) continue;
    if (f.conclusion) {
      rep.record(true, "");
      continue;
    }
    const bool match = matches_prop1_signature(e);
    rep.record(match, e.label + ": i_X = " + opt_string(e.report_x.pseudo_index) + " > i_Y = " +
                          opt_string(e.report_y.pseudo_index) + " on the boundary without the m-series signature");
    if (match) exceptions.push_back(e.label);
  }
  std::string s = "boundary exceptions matching the m-series signature:";
  for (const auto& l : exceptions) s += " " + l;
  rep.observations.push_back(s);
  return rep;
}

SuiteReport check_corollaries(const std::vector<CatalogEntry>& catalog) {
  SuiteReport rep;
  rep.suite = "corollaries";
  rep.scope = kOneSided;
  std::vector<std::string> n6_exceptions;
  for (const auto& e : catalog) {
    const TheoremFlags& f = e.theorem_flags;
    if (!f.both_fano) continue;
    const std::string tail = " (n = " + std::to_string(e.n) + ", i_Y = " + opt_string(e.report_y.pseudo_index) +
                             ", i_X = " + opt_string(e.report_x.pseudo_index) + ")";
    if (f.cor1_i) rep.record(f.conclusion, e.label + ": cor1(i) violated" + tail);
    if (f.cor2_i) rep.record(f.conclusion, e.label + ": cor2(i) violated" + tail);
    const bool exception_ok = !f.conclusion && e.n == 6 && matches_prop1_signature(e);
    if (f.cor1_ii) rep.record(f.conclusion || exception_ok, e.label + ": cor1(ii) violated" + tail);
    if (f.cor2_ii) {
      rep.record(f.conclusion || exception_ok, e.label + ": cor2(ii) violated" + tail);
      if (exception_ok) n6_exceptions.push_back(e.label);
    }
  }
  std::string s = "n = 6 exceptions matching the m-series signature:";
  for (const auto& l : n6_exceptions) s += " " + l;
  rep.observations.push_back(s);
  return rep;
}

SuiteReport check_identities(const std::vector<CatalogEntry>& catalog) {
  SuiteReport rep;
  rep.suite = "identities";
  std::size_t gcd_checked = 0;
  for (const auto& e : catalog) {
    const IdentityRecord& id = e.identities;
    rep.record(id.discrepancy, e.label + ": discrepancy identity fails");
    rep.record(id.picard_increment, e.label + ": Picard rank does not increase by one");
    rep.record(e.valid_y && e.valid_x, e.label + ": constructed fans do not validate smooth and complete");
    if (id.gcd_index) {
      ++gcd_checked;
      rep.record(*id.gcd_index, e.label + ": r_X = " + opt_string(e.report_x.fano_index) + " but gcd(r_Y, codim-1) = " +
                                    opt_string(id.expected_index));
    }
  }
  rep.observations.push_back("pairs with the index identity checked (both Fano): " + std::to_string(gcd_checked));
  return rep;
}

}  // namespace toric
