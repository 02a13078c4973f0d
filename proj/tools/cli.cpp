#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/catalog.hpp"
#include "toric/constructions.hpp"
#include "toric/errors.hpp"
#include "toric/fan_io.hpp"
#include "toric/invariants.hpp"
#include "toric/suites.hpp"

namespace toric::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<Integer> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<Integer> out;
  for (const auto& part : split(text, ',')) {
    const std::string p = trim(part);
    try {
      out.push_back(Integer::parse(p));
    } catch (const std::invalid_argument&) {
      throw InvalidInput(what + ": \"" + p + "\" is not an integer");
    }
  }
  if (out.empty()) throw InvalidInput(what + ": empty list");
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text, const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& v : parse_int_list(text, what)) {
    if (v.sign() < 0 || !v.fits_int64()) throw InvalidInput(what + ": " + v.to_string() + " is not a valid index");
    out.push_back(static_cast<std::size_t>(v.to_int64()));
  }
  return out;
}

CatalogLimits parse_limits(const std::string& text, std::uint64_t seed) {
  const auto v = parse_index_list(text, "--catalog");
  if (v.size() != 3) throw InvalidInput("--catalog: expected M,P,N (m_max, family max, n_max)");
  CatalogLimits l;
  l.m_max = v[0];
  l.family_max = v[1];
  l.n_max = v[2];
  l.seed = seed;
  return l;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string opt(const std::optional<Integer>& v) { return v ? v->to_string() : "-"; }

std::string degrees_string(const FanoReport& r) {
  std::string s = "{";
  bool first = true;
  for (const auto& [deg, count] : r.wall_degrees) {
    if (!first) s += ", ";
    s += deg.to_string() + ":" + std::to_string(count);
    first = false;
  }
  return s + "}";
}

void print_validation(const ValidationReport& rep, std::ostream& out) {
  out << "well_formed: " << (rep.well_formed ? "true" : "false") << '\n'
      << "smooth:      " << (rep.smooth ? "true" : "false") << '\n'
      << "complete:    " << (rep.complete ? "true" : "false") << '\n';
  for (const auto& d : rep.defects) {
    out << "defect: " << d.subject;
    if (d.index) out << ' ' << *d.index;
    out << ": " << d.reason << '\n';
  }
}

void print_report(const FanoReport& r, std::ostream& out) {
  out << "is_fano:      " << (r.is_fano ? "true" : "false") << '\n'
      << "pseudo_index: " << opt(r.pseudo_index) << '\n'
      << "fano_index:   " << opt(r.fano_index) << '\n'
      << "picard_rank:  " << r.picard_rank << '\n'
      << "min_degree:   " << r.min_degree << '\n'
      << "wall_degrees: " << degrees_string(r) << '\n'
      << "min_walls:    " << r.min_walls.size() << '\n';
  for (const auto& w : r.min_walls) out << "  " << to_json(w).dump() << '\n';
}

void print_suite(const SuiteReport& r, std::ostream& out) {
  out << "suite " << r.suite << ": checked " << r.checked << ", passed " << r.passed << ", failed " << r.failed << '\n';
  for (const auto& v : r.violations) out << "VIOLATION " << v << '\n';
  for (const auto& o : r.observations) out << "note: " << o << '\n';
  if (!r.scope.empty()) out << "scope: " << r.scope << '\n';
}

/// Reads a fan and insists on smooth + complete.
Fan load_valid_fan(const std::string& path, std::uint64_t seed) {
  Fan f = read_fan_file(path);
  const ValidationReport rep = validate_fan(f, seed);
  if (!rep.ok()) {
    std::string msg = path + ": fan is not a smooth complete fan";
    for (const auto& d : rep.defects) {
      msg += "; " + d.subject + (d.index ? " " + std::to_string(*d.index) : "") + ": " + d.reason;
      if (msg.size() > 2000) break;
    }
    throw InvalidInput(msg);
  }
  return f;
}

json row_json(const Prop1Row& r) {
  return json{{"m", r.m},
              {"n", r.n},
              {"dim_z", r.dim_z},
              {"report_y", to_json(r.y)},
              {"report_x", to_json(r.x)},
              {"x_has_degree_2", r.has_degree_two},
              {"x_has_degree_m_minus_1", r.has_degree_m_minus_one}};
}

json row_json(const FamilyRow& r) {
  auto o = [](const std::optional<Integer>& v) { return v ? to_json(*v) : json(nullptr); };
  return json{{"a", r.a},
              {"d", r.d},
              {"r", r.r},
              {"s", r.s},
              {"n", r.n},
              {"dim_z", r.dim_z},
              {"y_fano", r.y_fano},
              {"x_fano", r.x_fano},
              {"i_y", o(r.i_y)},
              {"i_x", o(r.i_x)},
              {"expected_y_fano", r.expected.y_fano},
              {"expected_x_fano", r.expected.x_fano},
              {"expected_i_y", o(r.expected.i_y)},
              {"expected_i_x", o(r.expected.i_x)}};
}

int verdict(const SuiteReport& r) { return r.ok() ? kExitOk : kExitViolations; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of smooth complete toric varieties and blow-up checks", "toricfano"};
  app.require_subcommand(1, 1);

  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "Seed for completeness sampling")->capture_default_str();

  bool json_out = false;
  std::string out_path;
  std::string fan_path, fan_path2;

  auto* validate = app.add_subcommand("validate", "Check well-formedness, smoothness and completeness of a fan");
  validate->add_option("fan", fan_path, "Fan JSON file")->required();
  validate->add_flag("--json", json_out, "JSON output");

  auto* invariants = app.add_subcommand("invariants", "Fano test, pseudo-index, index and Picard rank");
  invariants->add_option("fan", fan_path, "Fan JSON file")->required();
  invariants->add_flag("--json", json_out, "JSON output");

  auto* construct = app.add_subcommand("construct", "Build a fan");
  construct->require_subcommand(1, 1);
  std::size_t pspace_n = 0;
  auto* pspace = construct->add_subcommand("pspace", "Projective space P^n");
  pspace->add_option("--n", pspace_n, "Dimension")->required();
  pspace->add_option("-o,--output", out_path, "Output fan JSON (default: stdout)");
  auto* prod = construct->add_subcommand("product", "Product of two fans");
  prod->add_option("f", fan_path, "First fan")->required();
  prod->add_option("g", fan_path2, "Second fan")->required();
  prod->add_option("-o,--output", out_path, "Output fan JSON (default: stdout)");
  std::string base_text, twist_text;
  auto* pbundle = construct->add_subcommand("pbundle", "Projectivized split bundle over a product of projective spaces");
  pbundle->add_option("--base", base_text, "Base factor dimensions a1,...,at")->required();
  pbundle->add_option("--twists", twist_text, "Twist rows \"row;row;...\" (row 0 must be zero)")->required();
  pbundle->add_option("-o,--output", out_path, "Output fan JSON (default: stdout)");

  auto* blowup = app.add_subcommand("blowup", "Star subdivision along a cone");
  std::string cone_text;
  bool emit_pullback = false;
  blowup->add_option("fan", fan_path, "Fan JSON file")->required();
  blowup->add_option("--cone", cone_text, "Ray indices of the center cone i1,i2,...")->required();
  blowup->add_option("-o,--output", out_path, "Output fan JSON (default: stdout)");
  blowup->add_flag("--emit-pullback", emit_pullback, "Also print pi^*(-K_Y), E and the discrepancy check");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1, 1);
  std::size_t m_max = 8, family_max = 6;
  std::string catalog_text = "8,6,8";
  auto* v_prop1 = verify->add_subcommand("prop1", "m-series P(O^m + O(1)) over P^m blown up along P^m");
  v_prop1->add_option("--m-max", m_max, "Largest m")->capture_default_str();
  auto* v_family = verify->add_subcommand("family", "P(O^r + O(d)^s) over P^a family scan");
  v_family->add_option("--max", family_max, "Parameter bound P")->capture_default_str();
  std::vector<CLI::App*> catalog_suites;
  for (const char* name : {"theorem1", "theorem2", "corollaries", "identities"}) {
    auto* sc = verify->add_subcommand(name, std::string("Catalog suite: ") + name);
    sc->add_option("--catalog", catalog_text, "Catalog limits M,P,N")->capture_default_str();
    catalog_suites.push_back(sc);
  }
  for (auto* sc : verify->get_subcommands({})) sc->add_flag("--json", json_out, "JSON output");

  auto* catalog = app.add_subcommand("catalog", "Generate the blow-up catalog as JSON lines");
  std::size_t cat_m = 8, cat_p = 6, cat_n = 8, cat_max_entries = CatalogLimits{}.max_entries;
  catalog->add_option("--m-max", cat_m, "Largest m of the m-series")->capture_default_str();
  catalog->add_option("--max", cat_p, "Family parameter bound")->capture_default_str();
  catalog->add_option("--n-max", cat_n, "Largest n for blow-ups of P^n")->capture_default_str();
  catalog->add_option("--max-entries", cat_max_entries, "Truncate after this many entries")->capture_default_str();
  catalog->add_option("-o,--output", out_path, "Output JSON-lines file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*validate) {
      const ValidationReport rep = validate_fan(read_fan_file(fan_path), seed);
      if (json_out) {
        out << to_json(rep).dump(2) << '\n';
      } else {
        print_validation(rep, out);
      }
      return rep.ok() ? kExitOk : kExitViolations;
    }

    if (*invariants) {
      const FanoReport rep = fano_report(load_valid_fan(fan_path, seed));
      if (json_out) {
        out << to_json(rep).dump(2) << '\n';
      } else {
        print_report(rep, out);
      }
      return kExitOk;
    }

    if (*construct) {
      Fan f;
      if (*pspace) {
        f = projective_space(pspace_n);
      } else if (*prod) {
        f = product(load_valid_fan(fan_path, seed), load_valid_fan(fan_path2, seed));
      } else {
        BundleSpec spec;
        spec.base_dims = parse_index_list(base_text, "--base");
        for (const auto& row : split(twist_text, ';')) spec.twists.push_back(parse_int_list(row, "--twists"));
        f = projectivized_split_bundle(spec);
      }
      emit(to_json(f).dump() + "\n", out_path, out);
      return kExitOk;
    }

    if (*blowup) {
      const Fan y = load_valid_fan(fan_path, seed);
      const BlowupResult b = star_subdivision(y, parse_index_list(cone_text, "--cone"));
      if (!emit_pullback) {
        emit(to_json(b.fan_x).dump() + "\n", out_path, out);
        return kExitOk;
      }
      const std::size_t codim = b.center.size();
      const ToricDivisor pull = pullback_divisor(b, ToricDivisor::anticanonical(y));
      const ToricDivisor lhs = pull + Integer(-static_cast<std::int64_t>(codim - 1)) * exceptional_divisor(b);
      const bool identity = lhs == ToricDivisor::anticanonical(b.fan_x);
      json coeffs = json::array();
      for (const auto& c : pull.coeffs) coeffs.push_back(to_json(c));
      json info{{"e_ray", b.e_ray},
                {"center", to_json(b.center)},
                {"pullback_anticanonical", std::move(coeffs)},
                {"exceptional_multiplicity", codim - 1},
                {"discrepancy_identity", identity}};
      if (out_path.empty() || out_path == "-") {
        info["fan"] = to_json(b.fan_x);
      } else {
        write_text_file(out_path, to_json(b.fan_x).dump() + "\n");
      }
      out << info.dump() << '\n';
      return identity ? kExitOk : kExitViolations;
    }

    if (*verify) {
      if (*v_prop1) {
        if (m_max < 2) throw PreconditionError("--m-max must be at least 2");
        const Prop1Check chk = check_prop1(m_max);
        if (json_out) {
          json rows = json::array();
          for (const auto& r : chk.rows) rows.push_back(row_json(r));
          out << json{{"report", to_json(chk.report)}, {"rows", std::move(rows)}}.dump(2) << '\n';
        } else {
          out << std::setw(3) << "m" << std::setw(4) << "n" << std::setw(6) << "dimZ" << std::setw(7) << "Y_fano"
              << std::setw(7) << "X_fano" << std::setw(5) << "i_Y" << std::setw(5) << "i_X" << std::setw(5) << "r_Y"
              << std::setw(5) << "r_X" << "  X wall degrees\n";
          for (const auto& r : chk.rows) {
            out << std::setw(3) << r.m << std::setw(4) << r.n << std::setw(6) << r.dim_z << std::setw(7)
                << (r.y.is_fano ? "yes" : "no") << std::setw(7) << (r.x.is_fano ? "yes" : "no") << std::setw(5)
                << opt(r.y.pseudo_index) << std::setw(5) << opt(r.x.pseudo_index) << std::setw(5)
                << opt(r.y.fano_index) << std::setw(5) << opt(r.x.fano_index) << "  " << degrees_string(r.x) << '\n';
          }
          print_suite(chk.report, out);
        }
        return verdict(chk.report);
      }
      if (*v_family) {
        if (family_max < 2) throw PreconditionError("--max must be at least 2");
        const FamilyCheck chk = check_family(family_max);
        if (json_out) {
          json rows = json::array();
          for (const auto& r : chk.rows) rows.push_back(row_json(r));
          out << json{{"report", to_json(chk.report)}, {"rows", std::move(rows)}}.dump(2) << '\n';
        } else {
          out << std::setw(3) << "a" << std::setw(3) << "d" << std::setw(3) << "r" << std::setw(3) << "s"
              << std::setw(4) << "n" << std::setw(6) << "dimZ" << std::setw(7) << "Y_fano" << std::setw(7)
              << "X_fano" << std::setw(5) << "i_Y" << std::setw(5) << "i_X" << std::setw(7) << "f(i_Y)"
              << std::setw(7) << "f(i_X)" << '\n';
          for (const auto& r : chk.rows) {
            out << std::setw(3) << r.a << std::setw(3) << r.d << std::setw(3) << r.r << std::setw(3) << r.s
                << std::setw(4) << r.n << std::setw(6) << r.dim_z << std::setw(7) << (r.y_fano ? "yes" : "no")
                << std::setw(7) << (r.x_fano ? "yes" : "no") << std::setw(5) << opt(r.i_y) << std::setw(5)
                << opt(r.i_x) << std::setw(7) << opt(r.expected.i_y) << std::setw(7) << opt(r.expected.i_x) << '\n';
          }
          print_suite(chk.report, out);
        }
        return verdict(chk.report);
      }
      const Catalog cat = build_catalog(parse_limits(catalog_text, seed));
      SuiteReport rep;
      if (*catalog_suites[0]) rep = check_theorem1_suite(cat.entries);
      if (*catalog_suites[1]) rep = check_theorem2_boundary(cat.entries);
      if (*catalog_suites[2]) rep = check_corollaries(cat.entries);
      if (*catalog_suites[3]) rep = check_identities(cat.entries);
      if (json_out) {
        out << to_json(rep).dump(2) << '\n';
      } else {
        print_suite(rep, out);
      }
      return verdict(rep);
    }

    if (*catalog) {
      CatalogLimits limits{cat_m, cat_p, cat_n, cat_max_entries, seed};
      const Catalog cat = build_catalog(limits);
      emit(to_jsonl(cat), out_path, out);
      if (cat.truncated) {
        err << "catalog truncated: " << cat.entries.size() << " of " << cat.requested << " entries\n";
      }
      return kExitOk;
    }
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace toric::cli
