#include "kcover/graph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "kcover/errors.h"

namespace kcover {

Graph::Graph(int n, std::string name) : name_(std::move(name)) {
  if (n < 0) throw InputError("negative vertex count");
  adjacency_.resize(n);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges,
                            std::string name) {
  Graph g(n, std::move(name));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," +
                       std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n - 1));
    }
    if (u == v) {
      throw InputError("loop edge at vertex " + std::to_string(u));
    }
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  int degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += static_cast<int>(nbrs.size());
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_name(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Graph generalized_petersen(int n, int k) {
  if (n < 3 || k < 1 || 2 * k >= n) {
    throw PreconditionError("generalized_petersen requires n >= 3 and "
                            "1 <= k < n/2, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  std::vector<Edge> edges;
  edges.reserve(3 * n);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, n + (i + k) % n);
  }
  return Graph::from_edge_list(
      2 * n, edges,
      "GP(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

Graph petersen() { return generalized_petersen(5, 2).with_name("Petersen"); }

Graph desargues() {
  return generalized_petersen(10, 3).with_name("Desargues");
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges, "C" + std::to_string(n));
}

Graph complete(int n) {
  if (n < 1) throw PreconditionError("complete requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(n, edges, "K" + std::to_string(n));
}

Graph path(int n) {
  if (n < 1) throw PreconditionError("path requires n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges, "P" + std::to_string(n));
}

Graph hypercube(int d) {
  if (d < 1 || d > 20) throw PreconditionError("hypercube requires 1 <= d <= 20");
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return Graph::from_edge_list(n, edges, "Q" + std::to_string(d));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  const int offset = g.order();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edge_list(g.order() + h.order(), edges);
}

Graph relabel(const Graph& g, std::span<const int> image) {
  if (static_cast<int>(image.size()) != g.order()) {
    throw InputError("relabel: image size does not match graph order");
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(image[u], image[v]);
  Graph out = Graph::from_edge_list(g.order(), edges, g.name());
  if (out.size() != g.size()) throw InputError("relabel: image is not a bijection");
  return out;
}

namespace {

// BFS 2-coloring; on conflict returns the offending edge.
struct Coloring {
  std::vector<int> color;
  std::vector<int> parent;
  std::optional<Edge> conflict;
};

Coloring two_color(const Graph& g) {
  Coloring c;
  c.color.assign(g.order(), -1);
  c.parent.assign(g.order(), -1);
  std::deque<int> queue;
  for (int root = 0; root < g.order(); ++root) {
    if (c.color[root] != -1) continue;
    c.color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (c.color[v] == -1) {
          c.color[v] = 1 - c.color[u];
          c.parent[v] = u;
          queue.push_back(v);
        } else if (c.color[v] == c.color[u] && !c.conflict) {
          c.conflict = Edge{u, v};
        }
      }
    }
  }
  return c;
}

}  // namespace

std::optional<Bipartition> bipartition(const Graph& g) {
  Coloring c = two_color(g);
  if (c.conflict) return std::nullopt;
  Bipartition b;
  b.side.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    b.side[v] = static_cast<std::uint8_t>(c.color[v]);
    (c.color[v] == 0 ? b.v1_count : b.v2_count)++;
  }
  return b;
}

std::optional<std::vector<int>> odd_cycle(const Graph& g) {
  Coloring c = two_color(g);
  if (!c.conflict) return std::nullopt;
  // Both endpoints share a color, so their tree paths to the common ancestor
  // have equal parity and the closed walk through the conflict edge is odd.
  auto [u, v] = *c.conflict;
  std::vector<int> up_u{u}, up_v{v};
  while (c.parent[up_u.back()] != -1) up_u.push_back(c.parent[up_u.back()]);
  while (c.parent[up_v.back()] != -1) up_v.push_back(c.parent[up_v.back()]);
  while (up_u.size() > 1 && up_v.size() > 1 &&
         up_u[up_u.size() - 2] == up_v[up_v.size() - 2]) {
    up_u.pop_back();
    up_v.pop_back();
  }
  std::vector<int> cycle_vertices(up_u.begin(), up_u.end());
  for (auto it = up_v.rbegin() + 1; it != up_v.rend(); ++it) {
    cycle_vertices.push_back(*it);
  }
  return cycle_vertices;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(g.order(), false);
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> comp{root};
    seen[root] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int v : g.neighbors(comp[i])) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::vector<int> distances_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int d : distances_from(g, v)) best = std::max(best, d);
  }
  return best;
}

std::vector<std::vector<int>> triangles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      for (int w : g.neighbors(v)) {
        if (w <= v) continue;
        if (g.has_edge(u, w)) out.push_back({u, v, w});
      }
    }
  }
  return out;
}

bool is_hamilton_cycle(const Graph& g, std::span<const int> order) {
  if (static_cast<int>(order.size()) != g.order() || order.empty()) return false;
  std::vector<bool> seen(g.order(), false);
  for (int v : order) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = true;
  }
  if (g.order() < 3) return false;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_edge(order[i], order[(i + 1) % order.size()])) return false;
  }
  return true;
}

}  // namespace kcover
