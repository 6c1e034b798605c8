#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "lwl/graph.hpp"

namespace lwl::io {

enum class GraphFormat { EdgeList, Graph6 };

const char* to_string(GraphFormat f);

/// Edge-list text: '#' comment lines, blank lines, an optional "n <count>" header before the
/// first edge, then one "u v" pair per line (0-indexed). Without a header the vertex count is
/// max id + 1. Malformed lines throw ParseError with the line number; self-loops throw InputError.
Graph parse_edge_list(std::string_view text);

/// One graph6 record (an optional ">>graph6<<" prefix and trailing newline are accepted).
Graph parse_graph6(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);

/// Edge list always writes the "n" header, so isolated vertices survive a round trip.
std::string serialize(const Graph& g, GraphFormat format);

/// ".g6" selects graph6, anything else the edge-list format.
GraphFormat format_for(const std::filesystem::path& path);

Graph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const Graph& g);

/// G(n, p) from std::mt19937_64 seeded with `seed`. Pairs (i, j), i < j, are visited in
/// lexicographic order; each draws one 53-bit uniform u and becomes an edge iff u < p.
Graph gen_random(std::size_t n, double p, std::uint64_t seed);

}  // namespace lwl::io
