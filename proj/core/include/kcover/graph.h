#ifndef KCOVER_GRAPH_H_
#define KCOVER_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kcover {

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept sorted
// and duplicate-free; no loops. Immutable once constructed.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n, std::string name = {});

  // Builds a graph from an edge list. Duplicate pairs (in either orientation)
  // collapse to one edge. Throws InputError on loops or endpoints outside
  // 0..n-1.
  static Graph from_edge_list(int n, std::span<const Edge> edges,
                              std::string name = {});

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return edge_count_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;

  // All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::string& name() const { return name_; }
  Graph with_name(std::string name) const;

  // Structural equality: same order and same edge set. Names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<int>> adjacency_;
  int edge_count_ = 0;
  std::string name_;
};

// Two-coloring witness. side[v] is 0 or 1; every edge joins different sides.
struct Bipartition {
  std::vector<std::uint8_t> side;
  int v1_count = 0;
  int v2_count = 0;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Named families. All throw PreconditionError when parameters are out of
// range.
Graph generalized_petersen(int n, int k);  // n >= 3, 1 <= k < n/2
Graph petersen();                          // generalized_petersen(5, 2)
Graph desargues();                         // generalized_petersen(10, 3)
Graph cycle(int n);                        // n >= 3
Graph complete(int n);                     // n >= 1
Graph path(int n);                         // n >= 1
Graph hypercube(int d);                    // d >= 1

// H's vertices are shifted by |V(G)|.
Graph disjoint_union(const Graph& g, const Graph& h);

// Applies a vertex relabeling: vertex v of g becomes image[v].
Graph relabel(const Graph& g, std::span<const int> image);

// Proper 2-coloring if one exists. In every component the least vertex gets
// side 0.
std::optional<Bipartition> bipartition(const Graph& g);

// An odd cycle v0 v1 ... v_{2k} (closing back to v0) if g is not bipartite.
std::optional<std::vector<int>> odd_cycle(const Graph& g);

// Components as sorted vertex lists, ordered by least element.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> distances_from(const Graph& g, int source);

// Largest finite distance over all pairs within components.
int diameter(const Graph& g);

// Triangles as sorted vertex triples, in lexicographic order.
std::vector<std::vector<int>> triangles(const Graph& g);

// True if walking `order` (closing back to the first vertex) visits every
// vertex exactly once along edges of g.
bool is_hamilton_cycle(const Graph& g, std::span<const int> order);

}  // namespace kcover

#endif  // KCOVER_GRAPH_H_
