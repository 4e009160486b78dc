#pragma once
// JSON graph files and machine-readable reports.

#include <string>

#include <json.hpp>

#include "swcap/graph.hpp"
#include "swcap/lattice.hpp"

namespace swcap {

using Json = nlohmann::json;

/// Parses a graph document. Errors carry line/column or the offending field.
PlumbingGraph parse_graph(const std::string& text, const std::string& origin = "<input>");
PlumbingGraph read_graph_file(const std::string& path);

/// Vertices sorted by id, edges as sorted id pairs.
Json graph_to_json(const PlumbingGraph& g);
std::string serialize_graph(const PlumbingGraph& g);
void write_graph_file(const PlumbingGraph& g, const std::string& path);

Json to_json(const Int& x);
/// {"num", "den"} with integer members.
Json to_json(const Rat& x);
Json to_json(const DualVector& l);

}  // namespace swcap
