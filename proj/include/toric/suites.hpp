#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/catalog.hpp"

namespace toric {

/// Pass/fail tally of one verification suite.
struct SuiteReport {
  std::string suite;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> violations;
  std::vector<std::string> observations;
  std::string scope;

  void record(bool ok, const std::string& what_failed);
  [[nodiscard]] bool ok() const noexcept { return failed == 0; }
};

[[nodiscard]] nlohmann::json to_json(const SuiteReport& r);

struct Prop1Row {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t dim_z = 0;
  FanoReport y;
  FanoReport x;
  bool has_degree_two = false;
  bool has_degree_m_minus_one = false;
};

struct Prop1Check {
  std::vector<Prop1Row> rows;
  SuiteReport report;
};

/// The m-series for m = 2..m_max.
[[nodiscard]] Prop1Check check_prop1(std::size_t m_max);
/// Same checks over already evaluated m-series entries (params carry "m").
[[nodiscard]] Prop1Check check_prop1(const std::vector<CatalogEntry>& entries);

struct FamilyRow {
  std::size_t a = 0, d = 0, r = 0, s = 0;
  std::size_t n = 0;
  std::size_t dim_z = 0;
  bool y_fano = false;
  bool x_fano = false;
  std::optional<Integer> i_y, i_x;
  FamilyClosedForm expected;
};

struct FamilyCheck {
  std::vector<FamilyRow> rows;
  /// Rows with r*d > a >= d (X Fano, Y not).
  std::vector<std::size_t> x_only_region;
  SuiteReport report;
};

/// All (a, d, r, s) in [1, max_param]^4 with r >= 2.
[[nodiscard]] FamilyCheck check_family(std::size_t max_param);
[[nodiscard]] FamilyCheck check_family(const std::vector<CatalogEntry>& entries);

struct Theorem1Verdict {
  TheoremFlags flags;
  bool x_fano = false;
  /// "i", "ii", "iii" for each hypothesis that holds.
  std::vector<std::string> clauses;
  /// Set when no clause applies; boundary cases feed the theorem2 suite.
  bool boundary = false;

  [[nodiscard]] bool violated() const { return x_fano && !clauses.empty() && !flags.conclusion; }
  [[nodiscard]] std::string describe() const;
};

/// Requires y Fano.
[[nodiscard]] Theorem1Verdict check_theorem1(const Fan& y, const Cone& center);
[[nodiscard]] Theorem1Verdict theorem1_verdict(const CatalogEntry& e);

/// Catalog-wide suites.
[[nodiscard]] SuiteReport check_theorem1_suite(const std::vector<CatalogEntry>& catalog);
[[nodiscard]] SuiteReport check_theorem2_boundary(const std::vector<CatalogEntry>& catalog);
[[nodiscard]] SuiteReport check_corollaries(const std::vector<CatalogEntry>& catalog);
[[nodiscard]] SuiteReport check_identities(const std::vector<CatalogEntry>& catalog);

/// Invariant-signature comparison (dimension, ray and cone counts, Picard
/// ranks, wall-degree multisets, pseudo-indices and indices of X and Y).
[[nodiscard]] bool same_signature(const CatalogEntry& a, const CatalogEntry& b);
/// Whether e has the signature of the m-series pair of dimension e.n.
[[nodiscard]] bool matches_prop1_signature(const CatalogEntry& e);

}  // namespace toric
