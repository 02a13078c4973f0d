#include "toric/fan_io.hpp"

#include <fstream>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

using nlohmann::json;

namespace {

Integer integer_from_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  throw InvalidInput(where + ": expected an integer, got " + v.dump());
}

}  // namespace

Fan fan_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("fan: expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "dim" && key != "rays" && key != "max_cones") throw InvalidInput("fan: unknown key \"" + key + "\"");
  }
  for (const char* key : {"dim", "rays", "max_cones"}) {
    if (!j.contains(key)) throw InvalidInput(std::string("fan: missing key \"") + key + "\"");
  }
  const Integer dim = integer_from_json(j["dim"], "fan.dim");
  if (dim.sign() <= 0 || dim > Integer(1 << 16)) throw InvalidInput("fan.dim: must be a positive integer");
  if (!j["rays"].is_array()) throw InvalidInput("fan.rays: expected an array");
  if (!j["max_cones"].is_array()) throw InvalidInput("fan.max_cones: expected an array");

  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    const auto& r = j["rays"][i];
    const std::string where = "fan.rays[" + std::to_string(i) + "]";
    if (!r.is_array()) throw InvalidInput(where + ": expected an integer array");
    LatticeVector v;
    for (const auto& x : r) v.push_back(integer_from_json(x, where));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (std::size_t i = 0; i < j["max_cones"].size(); ++i) {
    const auto& c = j["max_cones"][i];
    const std::string where = "fan.max_cones[" + std::to_string(i) + "]";
    if (!c.is_array()) throw InvalidInput(where + ": expected an index array");
    Cone cone;
    for (const auto& x : c) {
      const Integer idx = integer_from_json(x, where);
      if (idx.sign() < 0) throw InvalidInput(where + ": negative ray index " + idx.to_string());
      cone.push_back(static_cast<std::size_t>(idx.to_int64()));
    }
    cones.push_back(std::move(cone));
  }
  return Fan(static_cast<std::size_t>(dim.to_int64()), std::move(rays), std::move(cones));
}

json to_json(const Integer& v) {
  if (!v.fits_int64()) throw InvalidInput("value " + v.to_string() + " exceeds the 64-bit interchange range");
  return v.to_int64();
}

json to_json(const Cone& c) {
  json a = json::array();
  for (auto i : c) a.push_back(i);
  return a;
}

json to_json(const Fan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) {
    json v = json::array();
    for (const auto& x : r) v.push_back(to_json(x));
    rays.push_back(std::move(v));
  }
  json cones = json::array();
  for (const auto& c : f.max_cones()) cones.push_back(to_json(c));
  return json{{"dim", f.dim()}, {"rays", std::move(rays)}, {"max_cones", std::move(cones)}};
}

json to_json(const ValidationReport& r) {
  json defects = json::array();
  for (const auto& d : r.defects) {
    json e{{"subject", d.subject}, {"reason", d.reason}};
    e["index"] = d.index ? json(*d.index) : json(nullptr);
    defects.push_back(std::move(e));
  }
  return json{{"well_formed", r.well_formed}, {"smooth", r.smooth}, {"complete", r.complete},
              {"defects", std::move(defects)}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": malformed JSON: " + e.what());
  }
}

Fan read_fan_file(const std::filesystem::path& path) {
  const json doc = read_json_file(path);
  try {
    return fan_from_json(doc);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInput("write failed for " + path.string());
}

}  // namespace toric
