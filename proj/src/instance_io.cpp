#include "ukpb/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ukpb {

using Json = nlohmann::ordered_json;

std::string write_instance(const Instance& inst) {
  Json doc;
  doc["R"] = inst.coefficient_bound;
  doc["capacity"] = to_decimal(inst.capacity);
  Json types = Json::array();
  for (const ItemType& t : inst.types) types.push_back({{"profit", t.profit}, {"weight", t.weight}});
  doc["types"] = std::move(types);
  return doc.dump(2) + "\n";
}

namespace {

std::int64_t integer_field(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer())
    throw ValidationError(std::string("field \"") + key + "\" must be an integer");
  return obj[key].get<std::int64_t>();
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("malformed instance document: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("instance document must be an object");
  Instance inst;
  inst.coefficient_bound = integer_field(doc, "R");
  if (!doc.contains("capacity") || !doc["capacity"].is_string())
    throw ValidationError("field \"capacity\" must be a decimal string");
  const auto cap = parse_decimal(doc["capacity"].get<std::string>());
  if (!cap) throw ValidationError("malformed capacity \"" + doc["capacity"].get<std::string>() + "\"");
  inst.capacity = *cap;
  if (!doc.contains("types") || !doc["types"].is_array())
    throw ValidationError("field \"types\" must be a list");
  for (const Json& t : doc["types"]) {
    if (!t.is_object()) throw ValidationError("each type must be an object");
    inst.types.push_back({integer_field(t, "profit"), integer_field(t, "weight")});
  }
  validate_instance(inst);
  return inst;
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_instance(inst);
}

}  // namespace ukpb
