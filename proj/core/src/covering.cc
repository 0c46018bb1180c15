#include "kcover/covering.h"

#include <algorithm>
#include <deque>

#include "kcover/errors.h"
#include "kcover/graph_io.h"

namespace kcover {

std::vector<int> CoveringMap::fiber(int b) const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(vertex_map.size()); ++v) {
    if (vertex_map[v] == b) out.push_back(v);
  }
  return out;
}

CoveringCheck verify_covering(const CoveringMap& m) {
  auto fail = [](std::string msg) { return CoveringCheck{false, std::move(msg)}; };
  const int nc = m.cover.order();
  const int nb = m.base.order();
  if (static_cast<int>(m.vertex_map.size()) != nc) {
    return fail("vertex_map has " + std::to_string(m.vertex_map.size()) +
                " entries for a cover with " + std::to_string(nc) + " vertices");
  }
  for (int v = 0; v < nc; ++v) {
    if (m.vertex_map[v] < 0 || m.vertex_map[v] >= nb) {
      return fail("cover vertex " + std::to_string(v) + " maps outside the base");
    }
  }
  for (const auto& [u, v] : m.cover.edges()) {
    const int fu = m.vertex_map[u], fv = m.vertex_map[v];
    if (fu == fv || !m.base.has_edge(fu, fv)) {
      return fail("not a homomorphism: cover edge {" + std::to_string(u) + "," +
                  std::to_string(v) + "} maps to non-edge {" + std::to_string(fu) +
                  "," + std::to_string(fv) + "}");
    }
  }
  for (int v = 0; v < nc; ++v) {
    const int b = m.vertex_map[v];
    if (m.cover.degree(v) != m.base.degree(b)) {
      return fail("not locally bijective: cover vertex " + std::to_string(v) +
                  " has degree " + std::to_string(m.cover.degree(v)) +
                  ", its image " + std::to_string(b) + " has degree " +
                  std::to_string(m.base.degree(b)));
    }
    std::vector<int> images;
    for (int w : m.cover.neighbors(v)) images.push_back(m.vertex_map[w]);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) {
      return fail("not locally bijective: two edges at cover vertex " +
                  std::to_string(v) + " map to the same base edge");
    }
  }
  if (m.fold < 1) return fail("fold must be positive");
  std::vector<int> fiber_size(nb, 0);
  for (int b : m.vertex_map) ++fiber_size[b];
  for (int b = 0; b < nb; ++b) {
    if (fiber_size[b] == 0) {
      return fail("not surjective: base vertex " + std::to_string(b) + " has no preimage");
    }
    if (fiber_size[b] != m.fold) {
      return fail("fiber over base vertex " + std::to_string(b) + " has " +
                  std::to_string(fiber_size[b]) + " vertices, fold is " +
                  std::to_string(m.fold));
    }
  }
  return {true, {}};
}

VoltageAssignment VoltageAssignment::constant(const Graph& base, std::uint8_t value) {
  VoltageAssignment va{base, {}};
  for (const auto& e : base.edges()) va.voltage[e] = value;
  return va;
}

CoveringMap voltage_double_cover(const VoltageAssignment& va) {
  const Graph& g = va.base;
  const int n = g.order();
  for (const auto& [e, value] : va.voltage) {
    if (!g.has_edge(e.first, e.second) || e.first > e.second) {
      throw PreconditionError("voltage entry for non-edge (" + std::to_string(e.first) +
                              "," + std::to_string(e.second) + ")");
    }
    if (value > 1) throw PreconditionError("voltages must be 0 or 1");
  }
  std::vector<Edge> edges;
  edges.reserve(2 * g.size());
  for (const auto& e : g.edges()) {
    auto it = va.voltage.find(e);
    if (it == va.voltage.end()) {
      throw PreconditionError("missing voltage for edge (" + std::to_string(e.first) +
                              "," + std::to_string(e.second) + ")");
    }
    const auto [u, v] = e;
    if (it->second == 0) {
      edges.emplace_back(u, v);
      edges.emplace_back(u + n, v + n);
    } else {
      edges.emplace_back(u, v + n);
      edges.emplace_back(u + n, v);
    }
  }
  CoveringMap m;
  m.base = g;
  m.cover = Graph::from_edge_list(2 * n, edges);
  m.vertex_map.resize(2 * n);
  for (int v = 0; v < n; ++v) m.vertex_map[v] = m.vertex_map[v + n] = v;
  m.fold = 2;
  return m;
}

namespace {

class CoverSearch {
 public:
  CoverSearch(const Graph& cover, const Graph& base)
      : cover_(cover),
        base_(base),
        fold_(cover.order() / base.order()),
        image_(cover.order(), -1),
        parent_(cover.order(), -1),
        fiber_count_(base.order(), 0) {
    std::vector<bool> seen(cover.order(), false);
    for (int root = 0; root < cover.order(); ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::deque<int> queue{root};
      while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        order_.push_back(u);
        for (int w : cover.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = true;
            parent_[w] = u;
            queue.push_back(w);
          }
        }
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (!degrees_compatible()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return image_;
  }

 private:
  bool degrees_compatible() const {
    std::map<int, long> balance;
    for (int v = 0; v < cover_.order(); ++v) ++balance[cover_.degree(v)];
    for (int b = 0; b < base_.order(); ++b) balance[base_.degree(b)] -= fold_;
    return std::all_of(balance.begin(), balance.end(),
                       [](const auto& kv) { return kv.second == 0; });
  }

  bool consistent(int v, int b) const {
    if (cover_.degree(v) != base_.degree(b) || fiber_count_[b] == fold_) return false;
    std::vector<int> placed_images;
    for (int w : cover_.neighbors(v)) {
      const int fw = image_[w];
      if (fw < 0) continue;
      if (!base_.has_edge(b, fw)) return false;
      // Local injectivity at the already-placed neighbor w.
      for (int x : cover_.neighbors(w)) {
        if (x != v && image_[x] == b) return false;
      }
      placed_images.push_back(fw);
    }
    std::sort(placed_images.begin(), placed_images.end());
    return std::adjacent_find(placed_images.begin(), placed_images.end()) ==
           placed_images.end();
  }

  bool extend(std::size_t idx) {
    if (idx == order_.size()) return true;
    const int v = order_[idx];
    std::vector<int> candidates;
    if (parent_[v] >= 0) {
      const auto nbrs = base_.neighbors(image_[parent_[v]]);
      candidates.assign(nbrs.begin(), nbrs.end());
    } else {
      candidates.resize(base_.order());
      for (int b = 0; b < base_.order(); ++b) candidates[b] = b;
    }
    for (int b : candidates) {
      if (!consistent(v, b)) continue;
      image_[v] = b;
      ++fiber_count_[b];
      if (extend(idx + 1)) return true;
      --fiber_count_[b];
      image_[v] = -1;
    }
    return false;
  }

  const Graph& cover_;
  const Graph& base_;
  const int fold_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<int> parent_;
  std::vector<int> fiber_count_;
};

}  // namespace

std::optional<CoveringMap> search_covering_map(const Graph& cover, const Graph& base,
                                               const CoverSearchLimits& limits) {
  if (base.order() == 0 || cover.order() == 0 || cover.order() % base.order() != 0) {
    throw PreconditionError("search_covering_map: cover order " +
                            std::to_string(cover.order()) +
                            " is not a positive multiple of base order " +
                            std::to_string(base.order()));
  }
  if (cover.order() > limits.max_cover_vertices) {
    throw LimitExceeded("search_covering_map: cover has " +
                        std::to_string(cover.order()) + " vertices, limit is " +
                        std::to_string(limits.max_cover_vertices));
  }
  CoverSearch search(cover, base);
  auto image = search.run();
  if (!image) return std::nullopt;
  return CoveringMap{base, cover, std::move(*image), cover.order() / base.order()};
}

Graph bridge_join(const Graph& g, int u, const Graph& h, int v) {
  if (u < 0 || u >= g.order() || v < 0 || v >= h.order()) {
    throw PreconditionError("bridge_join: attachment vertex out of range");
  }
  std::vector<Edge> edges = disjoint_union(g, h).edges();
  edges.emplace_back(u, g.order() + v);
  return Graph::from_edge_list(g.order() + h.order(), edges);
}

CoveringMap double_cover_extend(const CoveringMap& cg, const CoveringMap& ch, int u,
                                int v, BridgeLift lift) {
  if (cg.fold != 2 || ch.fold != 2) {
    throw PreconditionError("double_cover_extend: both coverings must be 2-fold");
  }
  if (u < 0 || u >= cg.base.order() || v < 0 || v >= ch.base.order()) {
    throw PreconditionError("double_cover_extend: attachment vertex out of range");
  }
  const std::vector<int> fu = cg.fiber(u);
  const std::vector<int> fv = ch.fiber(v);
  if (fu.size() != 2 || fv.size() != 2) {
    throw PreconditionError("double_cover_extend: fibers over attachment vertices "
                            "must have two vertices");
  }
  const int offset = cg.cover.order();
  std::vector<Edge> edges = disjoint_union(cg.cover, ch.cover).edges();
  if (lift == BridgeLift::kStraight) {
    edges.emplace_back(fu[0], offset + fv[0]);
    edges.emplace_back(fu[1], offset + fv[1]);
  } else {
    edges.emplace_back(fu[0], offset + fv[1]);
    edges.emplace_back(fu[1], offset + fv[0]);
  }
  CoveringMap m;
  m.base = bridge_join(cg.base, u, ch.base, v);
  m.cover = Graph::from_edge_list(offset + ch.cover.order(), edges);
  m.vertex_map = cg.vertex_map;
  for (int b : ch.vertex_map) m.vertex_map.push_back(b + cg.base.order());
  m.fold = 2;
  return m;
}

nlohmann::json covering_to_json(const CoveringMap& m) {
  return nlohmann::json{{"base_graph6", graph6_encode(m.base)},
                        {"cover_graph6", graph6_encode(m.cover)},
                        {"vertex_map", m.vertex_map},
                        {"fold", m.fold}};
}

CoveringMap covering_from_json(const nlohmann::json& j) {
  try {
    CoveringMap m;
    m.base = graph6_decode(j.at("base_graph6").get<std::string>());
    m.cover = graph6_decode(j.at("cover_graph6").get<std::string>());
    m.vertex_map = j.at("vertex_map").get<std::vector<int>>();
    m.fold = j.at("fold").get<int>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("covering map JSON: ") + e.what());
  }
}

}  // namespace kcover
