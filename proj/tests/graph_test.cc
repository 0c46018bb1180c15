#include "kcover/graph.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "kcover/automorphisms.h"
#include "kcover/errors.h"
#include "test_support.h"

namespace kcover {
namespace {

using ::kcover::testing::random_graph;
using ::kcover::testing::symmetric_and_loop_free;

TEST(FromEdgeListTest, Triangle) {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
  const Graph g = Graph::from_edge_list(3, edges);
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g, complete(3));
}

TEST(FromEdgeListTest, DeduplicatesBothOrientations) {
  const std::vector<Edge> edges{{0, 1}, {1, 0}};
  const Graph g = Graph::from_edge_list(2, edges);
  EXPECT_EQ(g.size(), 1);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(FromEdgeListTest, RejectsLoop) {
  const std::vector<Edge> edges{{0, 0}};
  EXPECT_THROW(Graph::from_edge_list(4, edges), InputError);
}

TEST(FromEdgeListTest, RejectsOutOfRangeEndpoint) {
  const std::vector<Edge> edges{{0, 4}};
  EXPECT_THROW(Graph::from_edge_list(4, edges), InputError);
  const std::vector<Edge> negative{{-1, 2}};
  EXPECT_THROW(Graph::from_edge_list(4, negative), InputError);
}

TEST(GeneralizedPetersenTest, PetersenAndDesargues) {
  const Graph p = generalized_petersen(5, 2);
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  for (int v = 0; v < p.order(); ++v) EXPECT_EQ(p.degree(v), 3);

  const Graph d = generalized_petersen(10, 3);
  EXPECT_EQ(d.order(), 20);
  EXPECT_EQ(d.size(), 30);
}

TEST(GeneralizedPetersenTest, PrismOnFourIsTheCube) {
  EXPECT_TRUE(are_isomorphic(generalized_petersen(4, 1), hypercube(3)));
}

TEST(GeneralizedPetersenTest, ParameterBounds) {
  EXPECT_THROW(generalized_petersen(2, 1), PreconditionError);
  EXPECT_THROW(generalized_petersen(5, 0), PreconditionError);
  EXPECT_THROW(generalized_petersen(4, 2), PreconditionError);
  EXPECT_THROW(generalized_petersen(10, 5), PreconditionError);
}

TEST(GeneralizedPetersenTest, CubicForAllValidParametersUpToTwenty) {
  for (int n = 3; n <= 20; ++n) {
    for (int k = 1; 2 * k < n; ++k) {
      const Graph g = generalized_petersen(n, k);
      ASSERT_EQ(g.order(), 2 * n) << n << "," << k;
      ASSERT_EQ(g.size(), 3 * n) << n << "," << k;
      ASSERT_TRUE(symmetric_and_loop_free(g));
      for (int v = 0; v < g.order(); ++v) ASSERT_EQ(g.degree(v), 3) << n << "," << k;
    }
  }
}

TEST(FamiliesTest, StandardConstructions) {
  const Graph c6 = cycle(6);
  EXPECT_EQ(c6.order(), 6);
  EXPECT_EQ(c6.size(), 6);
  EXPECT_TRUE(bipartition(c6).has_value());

  const Graph q3 = hypercube(3);
  EXPECT_EQ(q3.order(), 8);
  EXPECT_EQ(q3.size(), 12);
  for (int v = 0; v < 8; ++v) EXPECT_EQ(q3.degree(v), 3);

  const Graph two_k3 = disjoint_union(complete(3), complete(3));
  EXPECT_EQ(two_k3.order(), 6);
  EXPECT_EQ(two_k3.size(), 6);
  EXPECT_EQ(connected_components(two_k3).size(), 2u);
  EXPECT_TRUE(two_k3.has_edge(3, 5));

  EXPECT_THROW(cycle(2), PreconditionError);
  EXPECT_THROW(complete(0), PreconditionError);
  EXPECT_THROW(hypercube(0), PreconditionError);
}

TEST(BipartitionTest, EvenCycle) {
  const auto b = bipartition(cycle(4));
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->side, (std::vector<std::uint8_t>{0, 1, 0, 1}));
  EXPECT_EQ(b->v1_count, 2);
  EXPECT_EQ(b->v2_count, 2);
}

TEST(BipartitionTest, PetersenHasOddCycle) {
  const Graph p = petersen();
  EXPECT_FALSE(bipartition(p).has_value());
  const auto cyc = odd_cycle(p);
  ASSERT_TRUE(cyc.has_value());
  EXPECT_EQ(cyc->size() % 2, 1u);
  EXPECT_GE(cyc->size(), 5u);
  for (std::size_t i = 0; i < cyc->size(); ++i) {
    EXPECT_TRUE(p.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
  }
}

TEST(BipartitionTest, DesarguesSplitsTenTen) {
  const auto b = bipartition(desargues());
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->v1_count, 10);
  EXPECT_EQ(b->v2_count, 10);
}

TEST(BipartitionTest, LeastVertexOfEachComponentIsSideZero) {
  const Graph g = disjoint_union(path(3), path(2));
  const auto b = bipartition(g);
  ASSERT_TRUE(b.has_value());
  EXPECT_EQ(b->side, (std::vector<std::uint8_t>{0, 1, 0, 0, 1}));
}

TEST(BipartitionPropertyTest, WitnessIsAlwaysValid) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const Graph g = random_graph(rng, n, 0.25);
    const auto b = bipartition(g);
    const auto cyc = odd_cycle(g);
    ASSERT_NE(b.has_value(), cyc.has_value());
    if (b) {
      for (const auto& [u, v] : g.edges()) ASSERT_NE(b->side[u], b->side[v]);
    } else {
      ASSERT_EQ(cyc->size() % 2, 1u);
      for (std::size_t i = 0; i < cyc->size(); ++i) {
        ASSERT_TRUE(g.has_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
      }
    }
  }
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(connected_components(complete(3)),
            (std::vector<std::vector<int>>{{0, 1, 2}}));
  EXPECT_EQ(connected_components(disjoint_union(complete(2), complete(2))),
            (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(connected_components(Graph(3)),
            (std::vector<std::vector<int>>{{0}, {1}, {2}}));
}

TEST(ComponentsPropertyTest, PartitionOfVertices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(rng, n, 0.1);
    std::set<int> seen;
    int last_min = -1;
    for (const auto& comp : connected_components(g)) {
      ASSERT_TRUE(std::is_sorted(comp.begin(), comp.end()));
      ASSERT_GT(comp.front(), last_min);
      last_min = comp.front();
      for (int v : comp) ASSERT_TRUE(seen.insert(v).second);
    }
    ASSERT_EQ(static_cast<int>(seen.size()), n);
  }
}

TEST(MetricsTest, DistancesAndTriangles) {
  EXPECT_EQ(diameter(desargues()), 5);
  EXPECT_EQ(diameter(petersen()), 2);
  EXPECT_EQ(triangles(complete(4)).size(), 4u);
  EXPECT_TRUE(triangles(petersen()).empty());
  EXPECT_EQ(distances_from(disjoint_union(complete(2), complete(1)), 0),
            (std::vector<int>{0, 1, -1}));
}

TEST(MetricsTest, HamiltonCycle) {
  const std::vector<int> order{0, 1, 2, 3, 4, 5};
  EXPECT_TRUE(is_hamilton_cycle(cycle(6), order));
  const std::vector<int> bad{0, 2, 1, 3, 4, 5};
  EXPECT_FALSE(is_hamilton_cycle(cycle(6), bad));
  const std::vector<int> repeat{0, 1, 2, 3, 4, 4};
  EXPECT_FALSE(is_hamilton_cycle(cycle(6), repeat));
}

TEST(RelabelTest, PreservesStructure) {
  std::mt19937_64 rng(3);
  const Graph p = petersen();
  const Permutation perm = testing::random_permutation(rng, p.order());
  const Graph q = relabel(p, perm.image());
  EXPECT_EQ(q.size(), p.size());
  for (const auto& [u, v] : p.edges()) EXPECT_TRUE(q.has_edge(perm(u), perm(v)));
}

}  // namespace
}  // namespace kcover
