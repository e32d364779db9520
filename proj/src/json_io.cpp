#include "muint/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace muint {

namespace {

using json = nlohmann::ordered_json;

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw IoError("malformed JSON");
  return j;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw IoError(std::string(what) + " must be an integer");
  return j.get<int>();
}

} // namespace

std::string graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n;
  json edges = json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object()) throw IoError("graph JSON must be an object");
  if (!j.contains("n") || !j.contains("edges"))
    throw IoError("graph JSON needs \"n\" and \"edges\"");
  int n = as_int(j["n"], "\"n\"");
  if (!j["edges"].is_array()) throw IoError("\"edges\" must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw IoError("each edge must be a two-element array");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  try {
    return make_graph(n, edges);
  } catch (const GraphError& err) {
    throw IoError(std::string("invalid graph: ") + err.what());
  }
}

std::string coloring_to_json(const EdgeColoring& c) {
  json j;
  j["colors"] = c.colors;
  return j.dump();
}

EdgeColoring coloring_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_object() || !j.contains("colors"))
    throw IoError("coloring JSON needs \"colors\"");
  if (!j["colors"].is_array()) throw IoError("\"colors\" must be an array");
  EdgeColoring c;
  for (const auto& x : j["colors"]) c.colors.push_back(as_int(x, "color"));
  return c;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

} // namespace muint
