#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "octa/colored_graph.hpp"
#include "octa/hybrid_map.hpp"

namespace octa {

using Json = nlohmann::ordered_json;

// Graph documents:  {"bubbles": b, "sigma0": [4b integers], "comment": "..."}
// Map documents:    {"squares": n, "blacks": [[edge, ...], ...], "root": e}
// "comment" and "root" are optional. Parsers throw InvalidInput on malformed
// JSON, missing or mistyped fields, unknown fields, and out-of-range or
// duplicate entries.

ColoredGraph graph_from_json(const Json& doc);
Json graph_to_json(const ColoredGraph& g);

/// root is -1 when the document has none.
RootedMap map_from_json(const Json& doc);
Json map_to_json(const HybridMap& m);
Json map_to_json(const RootedMap& rooted);

Json parse_json(std::string_view text);
/// Reads a whole file; throws InvalidInput when it cannot be opened.
std::string read_file(const std::string& path);

/// True when the document looks like a map rather than a graph.
bool is_map_document(const Json& doc);

}  // namespace octa
