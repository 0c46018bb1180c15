#ifndef KCOVER_GRAPH_IO_H_
#define KCOVER_GRAPH_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "kcover/graph.h"

namespace kcover {

// graph6: printable bytes 63..126 encoding n followed by the upper triangle
// of the adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), ...),
// packed six bits per byte, most significant bit first.
std::string graph6_encode(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing whitespace. Throws
// InputError on a malformed size header, a truncated or overlong bitstring,
// nonzero padding bits, or bytes outside 63..126.
Graph graph6_decode(std::string_view text);

// Edge-list text: first non-comment line "n m", then m lines "u v"
// (0-based). '#' starts a comment that runs to end of line.
std::string edge_list_encode(const Graph& g);
Graph edge_list_decode(std::string_view text);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

// kAuto picks the edge-list parser when the first non-blank, non-comment
// line starts with a digit followed by whitespace, graph6 otherwise.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

}  // namespace kcover

#endif  // KCOVER_GRAPH_IO_H_
