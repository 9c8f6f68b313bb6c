#include "lks/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace lks {

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw Error("schema", "graph JSON needs \"n\" and \"edges\"");
  }
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error("schema", "edges must be [u, v] pairs");
    edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  return Graph(j.at("n").get<Vertex>(), edges);
}

Json tree_to_json(const RootedTree& t) {
  Json j = graph_to_json(t.as_graph());
  j["root"] = t.root();
  return j;
}

RootedTree tree_from_json(const Json& j) {
  const Graph g = graph_from_json(j);
  const Vertex root = j.contains("root") ? j.at("root").get<Vertex>() : 0;
  return RootedTree(g.n(), g.edges(), root);
}

Json vertices_to_json(const VertexList& v) { return Json(v); }

VertexList vertices_from_json(const Json& j) {
  if (!j.is_array()) throw Error("schema", "expected a vertex array");
  return j.get<VertexList>();
}

std::string graph_to_dot(const Graph& g, const std::string& label, const std::vector<int>& vertex_class) {
  static const char* kPalette[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3",
                                   "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd"};
  std::ostringstream out;
  out << "graph \"" << label << "\" {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    out << "  " << v;
    if (v < static_cast<Vertex>(vertex_class.size()) && vertex_class[v] >= 0) {
      out << " [style=filled, fillcolor=\"" << kPalette[vertex_class[v] % 10] << "\"]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("io", "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("schema", path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("io", "cannot write " + path);
  out << text;
}

}  // namespace lks
