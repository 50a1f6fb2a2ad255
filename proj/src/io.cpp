#include "octa/io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "octa/errors.hpp"

namespace octa {

namespace {

void only_fields(const Json& doc, std::initializer_list<const char*> allowed) {
  if (!doc.is_object()) throw InvalidInput("expected a JSON object");
  for (const auto& item : doc.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || item.key() == name;
    if (!known) throw InvalidInput("unknown field '" + item.key() + "'");
  }
}

int int_field(const Json& doc, const char* name) {
  if (!doc.contains(name)) throw InvalidInput(std::string("missing field '") + name + "'");
  const Json& v = doc.at(name);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + name + "' must be an integer");
  const auto x = v.get<std::int64_t>();
  if (x < INT32_MIN || x > INT32_MAX) throw InvalidInput(std::string("field '") + name + "' is out of range");
  return static_cast<int>(x);
}

std::vector<int> int_array(const Json& v, const std::string& what) {
  if (!v.is_array()) throw InvalidInput(what + " must be an array");
  std::vector<int> out;
  out.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw InvalidInput(what + " must hold integers");
    const auto value = x.get<std::int64_t>();
    if (value < 0 || value > INT32_MAX) throw InvalidInput(what + " entry out of range");
    out.push_back(static_cast<int>(value));
  }
  return out;
}

}  // namespace

ColoredGraph graph_from_json(const Json& doc) {
  only_fields(doc, {"bubbles", "sigma0", "comment"});
  const int b = int_field(doc, "bubbles");
  if (!doc.contains("sigma0")) throw InvalidInput("missing field 'sigma0'");
  if (doc.contains("comment") && !doc.at("comment").is_string())
    throw InvalidInput("field 'comment' must be a string");
  return ColoredGraph(b, int_array(doc.at("sigma0"), "sigma0"));
}

Json graph_to_json(const ColoredGraph& g) {
  Json doc;
  doc["bubbles"] = g.bubbles();
  doc["sigma0"] = std::vector<int>(g.sigma0().begin(), g.sigma0().end());
  return doc;
}

RootedMap map_from_json(const Json& doc) {
  only_fields(doc, {"squares", "blacks", "root", "comment"});
  const int squares = int_field(doc, "squares");
  if (!doc.contains("blacks")) throw InvalidInput("missing field 'blacks'");
  const Json& blacks = doc.at("blacks");
  if (!blacks.is_array()) throw InvalidInput("blacks must be an array");
  std::vector<std::vector<int>> rotations;
  for (const Json& b : blacks) rotations.push_back(int_array(b, "black vertex"));
  RootedMap out{HybridMap(squares, std::move(rotations)), -1};
  if (doc.contains("root")) {
    out.root = int_field(doc, "root");
    if (out.root < -1 || out.root >= out.map.edges()) throw InvalidInput("root edge out of range");
  }
  return out;
}

Json map_to_json(const HybridMap& m) {
  Json doc;
  doc["squares"] = m.squares();
  doc["blacks"] = m.blacks();
  return doc;
}

Json map_to_json(const RootedMap& rooted) {
  Json doc = map_to_json(rooted.map);
  doc["root"] = rooted.root;
  return doc;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool is_map_document(const Json& doc) { return doc.is_object() && doc.contains("blacks"); }

}  // namespace octa
