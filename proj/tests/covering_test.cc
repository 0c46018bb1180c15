#include "kcover/covering.h"

#include <random>

#include "gtest/gtest.h"
#include "kcover/automorphisms.h"
#include "kcover/errors.h"
#include "kcover/experiments.h"
#include "kcover/kronecker.h"
#include "test_support.h"

namespace kcover {
namespace {

using ::kcover::testing::random_graph;
using ::kcover::testing::random_permutation;

CoveringMap identity_cover(const Graph& g) {
  std::vector<int> map(g.order());
  for (int v = 0; v < g.order(); ++v) map[v] = v;
  return CoveringMap{g, g, map, 1};
}

TEST(VerifyCoveringTest, ValidMaps) {
  EXPECT_TRUE(verify_covering(kronecker_cover(petersen()).projection));
  EXPECT_TRUE(verify_covering(identity_cover(desargues())));
}

TEST(VerifyCoveringTest, CollapsedEdgeIsNotAHomomorphism) {
  const CoveringMap m{complete(1), complete(2), {0, 0}, 2};
  const CoveringCheck c = verify_covering(m);
  EXPECT_FALSE(c.valid);
  EXPECT_NE(c.diagnostic.find("not a homomorphism"), std::string::npos) << c.diagnostic;
}

TEST(VerifyCoveringTest, Diagnostics) {
  // C6 -> K3 wrapping twice is fine; C6 -> K3 sending 0,1,2 -> 0,1,0 is not.
  const CoveringMap wrap{complete(3), cycle(6), {0, 1, 2, 0, 1, 2}, 2};
  EXPECT_TRUE(verify_covering(wrap));

  CoveringMap bad = wrap;
  bad.vertex_map = {0, 1, 0, 1, 0, 1};
  const CoveringCheck c = verify_covering(bad);
  EXPECT_FALSE(c.valid);
  EXPECT_NE(c.diagnostic.find("locally bijective"), std::string::npos) << c.diagnostic;

  CoveringMap short_map = wrap;
  short_map.vertex_map.pop_back();
  EXPECT_FALSE(verify_covering(short_map));

  CoveringMap wrong_fold = wrap;
  wrong_fold.fold = 3;
  EXPECT_NE(verify_covering(wrong_fold).diagnostic.find("fold"), std::string::npos);

  // P3 -> P2 is a homomorphism but the middle vertex has degree 2 vs 1.
  const CoveringMap fold_path{path(2), path(3), {0, 1, 0}, 2};
  EXPECT_NE(verify_covering(fold_path).diagnostic.find("degree"), std::string::npos);
}

TEST(VoltageDoubleCoverTest, AllOnesIsKroneckerCover) {
  const Graph p = petersen();
  const CoveringMap m = voltage_double_cover(VoltageAssignment::constant(p, 1));
  EXPECT_EQ(m.cover, kronecker_cover(p).cover);
  EXPECT_TRUE(are_isomorphic(m.cover, desargues()));
  EXPECT_TRUE(verify_covering(m));
}

TEST(VoltageDoubleCoverTest, AllZerosIsTwoCopies) {
  const Graph x = build_graph_x();
  const CoveringMap m = voltage_double_cover(VoltageAssignment::constant(x, 0));
  EXPECT_EQ(m.cover, disjoint_union(x, x));
  EXPECT_TRUE(verify_covering(m));
}

TEST(VoltageDoubleCoverTest, SingleCrossedEdgeOnTriangle) {
  VoltageAssignment va = VoltageAssignment::constant(complete(3), 0);
  va.voltage[{0, 1}] = 1;
  const CoveringMap m = voltage_double_cover(va);
  EXPECT_TRUE(are_isomorphic(m.cover, cycle(6)));
}

TEST(VoltageDoubleCoverTest, Errors) {
  VoltageAssignment missing = VoltageAssignment::constant(complete(3), 1);
  missing.voltage.erase({0, 2});
  EXPECT_THROW(voltage_double_cover(missing), PreconditionError);

  VoltageAssignment extra = VoltageAssignment::constant(path(3), 1);
  extra.voltage[{0, 2}] = 0;
  EXPECT_THROW(voltage_double_cover(extra), PreconditionError);

  VoltageAssignment big = VoltageAssignment::constant(path(2), 2);
  EXPECT_THROW(voltage_double_cover(big), PreconditionError);
}

// Connected iff the base is connected and some cycle carries odd voltage;
// the latter holds iff the voltage is not a coboundary, i.e. the base has no
// 2-coloring c with voltage(u,v) = c(u) xor c(v).
bool has_odd_voltage_cycle(const VoltageAssignment& va) {
  const Graph& g = va.base;
  std::vector<int> color(g.order(), -1);
  for (int root = 0; root < g.order(); ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        const int volt = va.voltage.at({std::min(u, w), std::max(u, w)});
        const int want = color[u] ^ volt;
        if (color[w] < 0) {
          color[w] = want;
          stack.push_back(w);
        } else if (color[w] != want) {
          return true;
        }
      }
    }
  }
  return false;
}

TEST(VoltageDoubleCoverPropertyTest, AlwaysACoveringAndConnectivityRule) {
  std::mt19937_64 rng(401);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = random_graph(rng, n, 0.35);
    VoltageAssignment va{g, {}};
    for (const auto& e : g.edges()) va.voltage[e] = coin(rng) ? 1 : 0;
    const CoveringMap m = voltage_double_cover(va);
    ASSERT_TRUE(verify_covering(m)) << verify_covering(m).diagnostic;
    const bool expect_connected = is_connected(g) && has_odd_voltage_cycle(va);
    ASSERT_EQ(is_connected(m.cover), expect_connected);
  }
}

TEST(SearchCoveringMapTest, Examples) {
  const auto d_over_p = search_covering_map(desargues(), petersen());
  ASSERT_TRUE(d_over_p.has_value());
  EXPECT_EQ(d_over_p->fold, 2);
  EXPECT_TRUE(verify_covering(*d_over_p));

  EXPECT_THROW(search_covering_map(petersen(), desargues()), PreconditionError);

  const auto c6_over_k3 = search_covering_map(cycle(6), complete(3));
  ASSERT_TRUE(c6_over_k3.has_value());
  EXPECT_EQ(c6_over_k3->fold, 2);
  EXPECT_TRUE(verify_covering(*c6_over_k3));
}

TEST(SearchCoveringMapTest, MoreCases) {
  EXPECT_TRUE(search_covering_map(cycle(8), cycle(4)).has_value());
  EXPECT_TRUE(search_covering_map(desargues(), build_graph_x()).has_value());
  // Dodecahedron over Petersen via the antipodal map.
  EXPECT_TRUE(search_covering_map(generalized_petersen(10, 2), petersen()).has_value());
  EXPECT_FALSE(search_covering_map(cycle(8), complete(4)).has_value());
  const auto triple = search_covering_map(cycle(12), cycle(4));
  ASSERT_TRUE(triple.has_value());
  EXPECT_EQ(triple->fold, 3);
  EXPECT_FALSE(search_covering_map(desargues(), cycle(10)).has_value());
  // Two triangles are not a cover of C6.
  EXPECT_FALSE(search_covering_map(disjoint_union(complete(3), complete(3)), cycle(6)).has_value());
  EXPECT_THROW(search_covering_map(cycle(200), cycle(100)), LimitExceeded);
}

TEST(SearchCoveringMapPropertyTest, FoldOneMatchesIsomorphism) {
  std::mt19937_64 rng(409);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 0.45);
    const Graph h = trial % 2 ? relabel(g, random_permutation(rng, n).image())
                              : random_graph(rng, n, 0.45);
    const auto m = search_covering_map(g, h);
    // A 1-fold covering is an isomorphism.
    ASSERT_EQ(m.has_value(), are_isomorphic(g, h));
    if (m) ASSERT_TRUE(verify_covering(*m));
  }
}

TEST(SearchCoveringMapPropertyTest, FindsVoltageCovers) {
  std::mt19937_64 rng(419);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(rng, n, 0.4);
    VoltageAssignment va{g, {}};
    for (const auto& e : g.edges()) va.voltage[e] = coin(rng) ? 1 : 0;
    const Graph cover = voltage_double_cover(va).cover;
    const Graph shuffled = relabel(cover, random_permutation(rng, cover.order()).image());
    const auto m = search_covering_map(shuffled, g);
    ASSERT_TRUE(m.has_value());
    ASSERT_TRUE(verify_covering(*m)) << verify_covering(*m).diagnostic;
  }
}

TEST(BridgeJoinTest, Examples) {
  EXPECT_EQ(bridge_join(complete(2), 0, complete(2), 0), Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
  EXPECT_TRUE(are_isomorphic(bridge_join(complete(2), 0, complete(2), 0), path(4)));

  const Graph px = bridge_join(petersen(), 0, build_graph_x(), 0);
  EXPECT_EQ(px.order(), 20);
  EXPECT_EQ(px.size(), 31);
  EXPECT_TRUE(is_connected(px));
  EXPECT_TRUE(px.has_edge(0, 10));

  EXPECT_THROW(bridge_join(complete(2), 2, complete(2), 0), PreconditionError);
}

TEST(BridgeJoinTest, BridgeIsACutEdge) {
  const Graph x = build_graph_x();
  const Graph h1 = bridge_join(bridge_join(petersen(), 0, x, 0), 10, x, 0);
  EXPECT_EQ(h1.order(), 30);
  EXPECT_EQ(h1.size(), 47);
  std::vector<Edge> edges = h1.edges();
  std::erase(edges, Edge{0, 10});
  EXPECT_EQ(connected_components(Graph::from_edge_list(30, edges)).size(), 2u);
  // degree profile: two bridge endpoints of degree 4 (0 and 20), one of degree 5 (10)
  std::vector<int> high;
  for (int v = 0; v < 30; ++v) {
    if (h1.degree(v) > 3) high.push_back(v);
  }
  EXPECT_EQ(high, (std::vector<int>{0, 10, 20}));
  EXPECT_EQ(h1.degree(10), 5);
}

TEST(DoubleCoverExtendTest, TrivialCoversOfK2GiveTwoPaths) {
  const CoveringMap two_k2 = voltage_double_cover(VoltageAssignment::constant(complete(2), 0));
  const CoveringMap ext = double_cover_extend(two_k2, two_k2, 1, 0);
  EXPECT_TRUE(verify_covering(ext));
  EXPECT_EQ(ext.fold, 2);
  EXPECT_TRUE(are_isomorphic(ext.base, path(4)));
  EXPECT_TRUE(are_isomorphic(ext.cover, disjoint_union(path(4), path(4))));
}

TEST(DoubleCoverExtendTest, Errors) {
  const CoveringMap id = identity_cover(complete(2));
  const CoveringMap two_k2 = voltage_double_cover(VoltageAssignment::constant(complete(2), 0));
  EXPECT_THROW(double_cover_extend(id, two_k2, 0, 0), PreconditionError);
  EXPECT_THROW(double_cover_extend(two_k2, two_k2, 2, 0), PreconditionError);
}

TEST(DoubleCoverExtendTest, DesarguesChains) {
  const Graph p = petersen();
  const Graph x = build_graph_x();
  const CoveringMap kp = voltage_double_cover(VoltageAssignment::constant(p, 1));
  const CoveringMap kx = voltage_double_cover(VoltageAssignment::constant(x, 1));
  const CoveringMap xx = voltage_double_cover(VoltageAssignment::constant(x, 0));

  const CoveringMap g0 = double_cover_extend(double_cover_extend(kp, kx, 0, 0), kx, 10, 0);
  EXPECT_EQ(g0.cover.order(), 60);
  EXPECT_TRUE(verify_covering(g0));
  EXPECT_EQ(g0.base.order(), 30);

  const CoveringMap g1 = double_cover_extend(double_cover_extend(kp, kx, 0, 0), xx, 10, 0);
  EXPECT_EQ(g1.cover.order(), 60);
  EXPECT_TRUE(verify_covering(g1));
  EXPECT_TRUE(is_connected(g1.cover));
}

// The two ways to lift a bridge give isomorphic covers when the pieces are
// connected Kronecker covers.
TEST(DoubleCoverExtendTest, BridgePairingsAreIsomorphic) {
  const Graph p = petersen();
  const Graph x = build_graph_x();
  const CoveringMap kp = voltage_double_cover(VoltageAssignment::constant(p, 1));
  const CoveringMap kx = voltage_double_cover(VoltageAssignment::constant(x, 1));
  for (const auto& [a, b] : {std::pair{kp, kx}, std::pair{kx, kx}, std::pair{kp, kp}}) {
    for (int u : {0, 3}) {
      for (int v : {0, 3, 7}) {
        const CoveringMap s = double_cover_extend(a, b, u, v, BridgeLift::kStraight);
        const CoveringMap c = double_cover_extend(a, b, u, v, BridgeLift::kCrossed);
        ASSERT_TRUE(verify_covering(c));
        ASSERT_TRUE(are_isomorphic(s.cover, c.cover)) << u << "," << v;
      }
    }
  }
  for (int at : {0, 3}) {
    const TheoremObjects t = build_theorem_objects({{0, at, at, 0}});
    const CoveringMap ab = double_cover_extend(kp, kx, 0, at, BridgeLift::kCrossed);
    const CoveringMap g0_crossed =
        double_cover_extend(ab, kx, 10 + at, 0, BridgeLift::kCrossed);
    ASSERT_TRUE(are_isomorphic(g0_crossed.cover, t.g0.cover));
  }
}

TEST(CoveringJsonTest, RoundTripAndErrors) {
  const CoveringMap m = kronecker_cover(petersen()).projection;
  const nlohmann::json j = covering_to_json(m);
  EXPECT_EQ(j["base_graph6"], "IheA@GUAo");
  EXPECT_EQ(j["fold"], 2);
  const CoveringMap back = covering_from_json(j);
  EXPECT_EQ(back.base, m.base);
  EXPECT_EQ(back.cover, m.cover);
  EXPECT_EQ(back.vertex_map, m.vertex_map);
  EXPECT_THROW(covering_from_json(nlohmann::json{{"fold", 2}}), InputError);
}

}  // namespace
}  // namespace kcover
