#ifndef KCOVER_COVERING_H_
#define KCOVER_COVERING_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "kcover/graph.h"

namespace kcover {

// Vertex map from `cover` onto `base`. A valid covering is surjective, has
// `fold` vertices in every fiber, maps edges to edges, and restricts to a
// bijection between the edges at v and the edges at vertex_map[v].
struct CoveringMap {
  Graph base;
  Graph cover;
  std::vector<int> vertex_map;
  int fold = 0;

  // Cover vertices over base vertex b, ascending.
  std::vector<int> fiber(int b) const;
};

struct CoveringCheck {
  bool valid = false;
  std::string diagnostic;  // first failure; empty when valid

  explicit operator bool() const { return valid; }
};

// Never throws; reports the first violated condition.
CoveringCheck verify_covering(const CoveringMap& m);

// Z2 voltages on the base edges, keyed by (u, v) with u < v.
struct VoltageAssignment {
  Graph base;
  std::map<Edge, std::uint8_t> voltage;

  static VoltageAssignment constant(const Graph& base, std::uint8_t value);
};

// Derived double cover on 2n vertices: v and v+n lie over v. Voltage 0 lifts
// {u,v} to {u,v} and {u+n,v+n}; voltage 1 lifts it to {u,v+n} and {u+n,v}.
// Throws PreconditionError on a missing entry, an entry for a non-edge, or a
// value other than 0/1.
CoveringMap voltage_double_cover(const VoltageAssignment& va);

struct CoverSearchLimits {
  int max_cover_vertices = 128;
};

// Backtracking search for a covering map cover -> base. Cover vertices are
// visited in BFS order (component by component, roots ascending); each one
// takes the least base vertex consistent with degrees, fiber capacity,
// adjacency to already-placed neighbors, and injectivity on neighborhoods.
// Throws PreconditionError if |V(cover)| is not a positive multiple of
// |V(base)| or the cover exceeds the limit.
std::optional<CoveringMap> search_covering_map(const Graph& cover, const Graph& base,
                                               const CoverSearchLimits& limits = {});

// G ⌣ H: disjoint union with H shifted by |V(G)| plus the edge {u, |V(G)|+v}.
Graph bridge_join(const Graph& g, int u, const Graph& h, int v);

// How the bridge {u, v} lifts into the extended double cover.
enum class BridgeLift {
  kStraight,  // u0-v0, u1-v1
  kCrossed,   // u0-v1, u1-v0
};

// Extends 2-fold coverings of G and H to a 2-fold covering of
// bridge_join(G, u, H, v). The cover is the disjoint union of both covers
// (H's cover shifted by |V(cg.cover)|) plus two lifts of the bridge, where
// u0 < u1 and v0 < v1 are the fibers over u and v.
CoveringMap double_cover_extend(const CoveringMap& cg, const CoveringMap& ch, int u,
                                int v, BridgeLift lift = BridgeLift::kStraight);

nlohmann::json covering_to_json(const CoveringMap& m);
// Throws InputError on missing fields or undecodable graphs. Does not verify.
CoveringMap covering_from_json(const nlohmann::json& j);

}  // namespace kcover

#endif  // KCOVER_COVERING_H_
