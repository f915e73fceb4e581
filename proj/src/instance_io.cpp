#include "crossmetric/instance_io.hpp"

#include <array>
#include <cstdio>
#include <set>

#include <json.hpp>

#include "crossmetric/error.hpp"
#include "crossmetric/random.hpp"

namespace crossmetric {

namespace {

using ordered_json = nlohmann::ordered_json;

void require_keys(const nlohmann::json& obj, const std::set<std::string>& allowed, const char* what) {
  if (!obj.is_object()) throw InvalidInstance(std::string(what) + " must be an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw InvalidInstance(std::string("unknown field '") + key + "' in " + what);
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) throw InvalidInstance(std::string("missing field '") + key + "' in " + what);
  }
}

Coord as_coord(const nlohmann::json& v, const char* what) {
  if (!v.is_number_integer()) throw InvalidInstance(std::string(what) + " must be a JSON integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InvalidInstance(std::string(what) + " out of range");
  }
  return v.get<Coord>();
}

std::vector<Coord> as_coords(const nlohmann::json& v, std::size_t dim, const char* what) {
  if (!v.is_array() || v.size() != dim) throw InvalidInstance(std::string(what) + " must be an array of dim integers");
  std::vector<Coord> out;
  out.reserve(dim);
  for (const auto& c : v) out.push_back(as_coord(c, what));
  return out;
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["dim"] = inst.dim;
  j["seed"] = inst.seed;
  j["points"] = ordered_json::array();
  for (const auto& p : inst.points) j["points"].push_back(p.coords);
  j["hyperplanes"] = ordered_json::array();
  for (const auto& h : inst.hyperplanes) {
    ordered_json hj;
    hj["normal"] = h.normal;
    hj["offset"] = h.offset;
    j["hyperplanes"].push_back(std::move(hj));
  }
  return j.dump();
}

Instance instance_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInstance(std::string("malformed JSON: ") + e.what());
  }
  require_keys(j, {"dim", "seed", "points", "hyperplanes"}, "instance");
  Instance inst;
  const auto& dim = j["dim"];
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 2) throw InvalidInstance("dim must be an integer >= 2");
  inst.dim = dim.get<std::size_t>();
  const auto& seed = j["seed"];
  if (!seed.is_number_integer()) throw InvalidInstance("seed must be a JSON integer");
  inst.seed = seed.is_number_unsigned() ? seed.get<std::uint64_t>() : static_cast<std::uint64_t>(seed.get<std::int64_t>());
  if (!j["points"].is_array()) throw InvalidInstance("points must be an array");
  for (const auto& p : j["points"]) inst.points.push_back(Point{as_coords(p, inst.dim, "point")});
  if (!j["hyperplanes"].is_array()) throw InvalidInstance("hyperplanes must be an array");
  for (const auto& h : j["hyperplanes"]) {
    require_keys(h, {"normal", "offset"}, "hyperplane");
    inst.hyperplanes.push_back(Hyperplane{as_coords(h["normal"], inst.dim, "normal"), as_coord(h["offset"], "offset")});
  }
  validate(inst);
  return inst;
}

std::string instance_digest(const Instance& inst) {
  std::array<char, 17> buf{};
  std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(fnv1a(instance_to_json(inst))));
  return std::string(buf.data());
}

}  // namespace crossmetric
