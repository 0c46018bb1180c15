#include "kcover/graph_io.h"

#include <random>

#include "gtest/gtest.h"
#include "kcover/errors.h"
#include "test_support.h"

namespace kcover {
namespace {

// Expected strings below were produced independently with networkx
// (to_graph6_bytes, header=False) on the same vertex labeling.
TEST(Graph6Test, KnownEncodings) {
  EXPECT_EQ(graph6_encode(complete(3)), "Bw");
  EXPECT_EQ(graph6_encode(Graph(3)), "B?");
  EXPECT_EQ(graph6_encode(Graph(1)), "@");
  EXPECT_EQ(graph6_encode(cycle(5)), "Dhc");
  EXPECT_EQ(graph6_encode(petersen()), "IheA@GUAo");
  EXPECT_EQ(graph6_encode(desargues()), "ShCGGC@_K?G?G?CA@?_GC?_O@G_@G_?cO");
}

TEST(Graph6Test, KnownDecodings) {
  EXPECT_EQ(graph6_decode("Bw"), complete(3));
  const Graph empty = graph6_decode("B?");
  EXPECT_EQ(empty.order(), 3);
  EXPECT_EQ(empty.size(), 0);
  EXPECT_EQ(graph6_decode("IheA@GUAo"), petersen());
  EXPECT_EQ(graph6_decode(">>graph6<<IheA@GUAo\n"), petersen());
}

TEST(Graph6Test, LongSizeHeader) {
  const std::string g6 = graph6_encode(Graph(63));
  ASSERT_EQ(g6.substr(0, 4), "~??~");
  EXPECT_EQ(g6.size(), 4u + (63 * 62 / 2 + 5) / 6);
  EXPECT_EQ(graph6_decode(g6).order(), 63);
  EXPECT_EQ(graph6_encode(graph6_decode(g6)), g6);
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(graph6_decode(""), InputError);
  EXPECT_THROW(graph6_decode("B"), InputError);        // truncated
  EXPECT_THROW(graph6_decode("Bw?"), InputError);      // trailing byte
  EXPECT_THROW(graph6_decode("B!"), InputError);       // byte below 63
  EXPECT_THROW(graph6_decode("B\x7f"), InputError);    // byte above 126
  EXPECT_THROW(graph6_decode("~?"), InputError);       // truncated header
  EXPECT_THROW(graph6_decode("Bx"), InputError);       // nonzero padding
}

TEST(Graph6PropertyTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 32; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const double p = (trial % 5 + 1) / 6.0;
      const Graph g = testing::random_graph(rng, n, p);
      const std::string g6 = graph6_encode(g);
      const Graph back = graph6_decode(g6);
      ASSERT_EQ(back, g) << g6;
      ASSERT_EQ(graph6_encode(back), g6);
    }
  }
}

TEST(EdgeListTest, ParsesCommentsAndWhitespace) {
  const Graph g = edge_list_decode(
      "# triangle\n"
      "3 3   # header\n"
      "0 1\n"
      "\t1   2\n"
      "\n"
      "2 0\n");
  EXPECT_EQ(g, complete(3));
}

TEST(EdgeListTest, RoundTrip) {
  const Graph p = petersen();
  const std::string text = edge_list_encode(p);
  EXPECT_EQ(text.substr(0, 6), "10 15\n");
  EXPECT_EQ(edge_list_decode(text), p);
}

TEST(EdgeListTest, RejectsBadInput) {
  EXPECT_THROW(edge_list_decode(""), InputError);
  EXPECT_THROW(edge_list_decode("3\n"), InputError);
  EXPECT_THROW(edge_list_decode("3 2\n0 1\n"), InputError);      // count mismatch
  EXPECT_THROW(edge_list_decode("3 1\n0 x\n"), InputError);      // not an integer
  EXPECT_THROW(edge_list_decode("3 1\n0 3\n"), InputError);      // out of range
  EXPECT_THROW(edge_list_decode("3 1\n1 1\n"), InputError);      // loop
  EXPECT_THROW(edge_list_decode("3 1\n0 1 2\n"), InputError);    // extra token
}

TEST(ParseGraphTest, AutoDetection) {
  EXPECT_EQ(parse_graph("Bw"), complete(3));
  EXPECT_EQ(parse_graph("3 3\n0 1\n1 2\n0 2\n"), complete(3));
  EXPECT_EQ(parse_graph("# comment\n2 1\n0 1\n"), complete(2));
  // A digit-led graph6 string is impossible (digits are below 63), but an
  // explicit format still wins.
  EXPECT_THROW(parse_graph("3 3\n0 1\n1 2\n0 2\n", GraphFormat::kGraph6), InputError);
  EXPECT_EQ(parse_graph("Bw", GraphFormat::kGraph6), complete(3));
}

}  // namespace
}  // namespace kcover
