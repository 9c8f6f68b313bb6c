#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "lks/graph.hpp"

namespace lks {

using Json = nlohmann::json;

// {"n": int, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Graph format plus "root".
Json tree_to_json(const RootedTree& t);
RootedTree tree_from_json(const Json& j);

Json vertices_to_json(const VertexList& v);
VertexList vertices_from_json(const Json& j);

// Graphviz rendering. `label` names the graph; vertex colors are optional
// (one integer class per vertex, -1 for none).
std::string graph_to_dot(const Graph& g, const std::string& label = "G", const std::vector<int>& vertex_class = {});

Json read_json_file(const std::string& path);
// "-" or an empty path means stdout.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace lks
