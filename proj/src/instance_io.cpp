#include <fstream>
#include <sstream>

#include "json.hpp"

#include "noisebound/errors.hpp"
#include "noisebound/instances.hpp"

namespace noisebound {

using nlohmann::json;

std::string to_json(const IsingInstance& instance) {
  json edges = json::array();
  for (const auto& e : instance.edges()) edges.push_back(json::array({e.i, e.j, e.coupling}));
  json fields = json::array();
  for (double b : instance.fields()) fields.push_back(b);
  json doc = json::object();
  doc["n"] = instance.size();
  doc["edges"] = std::move(edges);
  doc["fields"] = std::move(fields);
  // nlohmann::json sorts object keys; "edges" < "fields" < "n" is stable.
  return doc.dump() + "\n";
}

IsingInstance instance_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("instance JSON does not parse: ") + e.what());
  }
  require(doc.is_object() && doc.contains("n") && doc.contains("edges") && doc.contains("fields"),
          "instance JSON needs keys n, edges, fields");
  require(doc["n"].is_number_integer(), "n must be an integer");
  const int n = doc["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    require(item.is_array() && item.size() == 3 && item[0].is_number_integer() &&
                item[1].is_number_integer() && item[2].is_number(),
            "each edge must be [i, j, a]");
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  std::vector<double> fields;
  for (const auto& item : doc["fields"]) {
    require(item.is_number(), "fields must be numbers");
    fields.push_back(item.get<double>());
  }
  return IsingInstance(n, std::move(edges), std::move(fields));
}

IsingInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return instance_from_json(buffer.str());
}

void save_instance(const IsingInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write instance file " + path);
  out << to_json(instance);
}

}  // namespace noisebound
