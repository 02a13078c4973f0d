#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/constructions.hpp"
#include "toric/invariants.hpp"

namespace toric {

/// A smooth complete fan together with a blow-up center.
struct BlowupPair {
  std::string label;
  nlohmann::json params;
  Fan y;
  Cone center;
};

/// Y = P(O^m + O(1)) over P^m, centered at the section cut out by the m
/// trivial fiber coordinates (Z = P^m, codimension m). Requires m >= 2.
[[nodiscard]] BlowupPair build_prop1_pair(std::size_t m);

/// Y = P(O^r + O(d)^s) over P^a, centered at Z = P(O(d)^s) (codimension r).
/// Requires r >= 2 and a, d, s >= 1.
[[nodiscard]] BlowupPair build_family_pair(std::size_t a, std::size_t d, std::size_t r, std::size_t s);

/// Blow-up of P^n along the coordinate subspace P^k (0 <= k <= n-2).
[[nodiscard]] BlowupPair build_pspace_pair(std::size_t n, std::size_t k);

/// Closed forms for the P(O^r + O(d)^s) family.
struct FamilyClosedForm {
  bool y_fano;
  bool x_fano;
  std::optional<Integer> i_y;  // only when y_fano
  std::optional<Integer> i_x;  // only when x_fano
};
[[nodiscard]] FamilyClosedForm family_closed_form(std::size_t a, std::size_t d, std::size_t r, std::size_t s);

/// Outcome of the blow-up identity checks for one pair.
struct IdentityRecord {
  std::size_t codim = 0;
  bool discrepancy = false;       // -K_X = pi^*(-K_Y) - (codim-1) E coefficient-wise
  bool picard_increment = false;  // rho(X) = rho(Y) + 1 and #rays + 1
  std::optional<bool> gcd_index;  // r_X = gcd(r_Y, codim-1); only when both Fano
  std::optional<Integer> expected_index;

  [[nodiscard]] bool ok() const { return discrepancy && picard_increment && gcd_index.value_or(true); }
  friend bool operator==(const IdentityRecord&, const IdentityRecord&) = default;
};

/// Hypotheses and conclusion of the pseudo-index inequalities for one pair.
/// Everything is recomputed from (n, dim Z, i_Y, i_X).
struct TheoremFlags {
  bool both_fano = false;
  bool conclusion = false;  // i_X <= i_Y
  bool thm1_i = false;      // 2 dim Z < n + i_Y - 1
  bool thm1_ii = false;     // 2 dim Z = n + i_Y - 1 and i_Y >= 2
  bool thm1_iii = false;    // 2 dim Z < n
  bool boundary = false;    // 2 dim Z = n + i_Y - 1
  bool cor1_i = false;      // 3 i_Y > n - 3
  bool cor1_ii = false;     // 3 i_Y = n - 3
  bool cor2_i = false;      // n <= 5
  bool cor2_ii = false;     // n = 6

  friend bool operator==(const TheoremFlags&, const TheoremFlags&) = default;
};

[[nodiscard]] TheoremFlags theorem_flags(std::size_t n, std::size_t dim_z, const FanoReport& y, const FanoReport& x);

struct CatalogEntry {
  std::string label;
  nlohmann::json params;
  std::size_t n = 0;
  std::size_t dim_z = 0;
  std::size_t rays_y = 0, cones_y = 0, rays_x = 0, cones_x = 0;
  bool valid_y = false;  // validate_fan(Y).ok()
  bool valid_x = false;  // validate_fan(X).ok()
  FanoReport report_y;
  FanoReport report_x;
  IdentityRecord identities;
  TheoremFlags theorem_flags;
};

/// Blow-up identity checks for a single (Y, center).
[[nodiscard]] IdentityRecord check_blowup_identities(const Fan& y, const Cone& center);

/// Blows up the pair and fills every report and flag.
[[nodiscard]] CatalogEntry evaluate_pair(const BlowupPair& pair, std::uint64_t seed = kDefaultSeed);

struct CatalogLimits {
  std::size_t m_max = 8;
  std::size_t family_max = 6;
  std::size_t n_max = 8;
  std::size_t max_entries = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
};

struct Catalog {
  CatalogLimits limits;
  std::vector<CatalogEntry> entries;
  bool truncated = false;
  std::size_t requested = 0;  // number of pairs the limits describe
};

/// Pair list described by the limits, in catalog order: the m-series, the
/// (a, d, r, s) family in lexicographic order, then (n, k) blow-ups of P^n.
[[nodiscard]] std::vector<BlowupPair> catalog_pairs(const CatalogLimits& limits);

/// Evaluates every pair (in parallel when hardware allows); order follows
/// catalog_pairs regardless of scheduling.
[[nodiscard]] Catalog build_catalog(const CatalogLimits& limits);
[[nodiscard]] std::vector<CatalogEntry> evaluate_pairs(const std::vector<BlowupPair>& pairs, std::uint64_t seed);

[[nodiscard]] nlohmann::json to_json(const IdentityRecord& r);
[[nodiscard]] nlohmann::json to_json(const TheoremFlags& f);
[[nodiscard]] nlohmann::json to_json(const CatalogEntry& e);
/// One JSON object per line; a trailing {"truncated": true, ...} line marks
/// a partial catalog.
[[nodiscard]] std::string to_jsonl(const Catalog& c);

}  // namespace toric
