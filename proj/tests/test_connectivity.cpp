#include <gtest/gtest.h>

#include <random>

#include "lambda_lab/connectivity.hpp"
#include "lambda_lab/generators.hpp"
#include "lambda_lab/structure.hpp"
#include "oracles.hpp"

using namespace lambda_lab;

TEST(IsConnected, Conventions) {
  EXPECT_TRUE(is_connected(Graph(1)));
  EXPECT_TRUE(is_connected(Graph(0)));
  EXPECT_FALSE(is_connected(Graph(4, {Edge(0, 1), Edge(2, 3)})));
}

TEST(Components, OrderedBySmallestVertex) {
  // K_3 on {1,3,4} and K_2 on {0,2}.
  const Graph g(5, {Edge(1, 3), Edge(3, 4), Edge(1, 4), Edge(0, 2)});
  const std::vector<VertexSet> comps = components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], bits::single(0) | bits::single(2));
  EXPECT_EQ(comps[1], bits::single(1) | bits::single(3) | bits::single(4));

  const Graph k5 = make_family({Family::complete, {5}});
  EXPECT_EQ(components(k5), std::vector<VertexSet>{k5.vertices()});
}

TEST(Components, KFiveMinusEdgeWithoutItsSeparatingTriangle) {
  // K_5 - {0,1}: deleting the common neighbours 2,3,4 leaves 0 and 1 isolated.
  const Graph g = make_family({Family::complete_minus_edge, {5}});
  const Graph rest = delete_vertices(g, bits::single(2) | bits::single(3) | bits::single(4));
  const std::vector<VertexSet> comps = components(rest);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(bits::count(comps[0]), 1);
  EXPECT_EQ(bits::count(comps[1]), 1);
}

TEST(ThreeConnected, Examples) {
  EXPECT_TRUE(is_3_connected(make_family({Family::complete, {4}})));
  EXPECT_TRUE(is_3_connected(make_family({Family::complete, {3}})));
  EXPECT_TRUE(is_3_connected(Graph(1)));  // vacuous: no separator exists
  EXPECT_TRUE(is_3_connected(Graph(2, {Edge(0, 1)})));
  EXPECT_TRUE(is_3_connected(make_family({Family::prism})));
  EXPECT_TRUE(is_3_connected(make_family({Family::petersen})));

  std::vector<Edge> c5;
  for (VertexId i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
  const ThreeConnectivity r = is_3_connected(Graph(5, c5));
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  ASSERT_EQ(r.witness->vertices.size(), 2U);
  EXPECT_FALSE(Graph(5, c5).adjacent(r.witness->vertices[0], r.witness->vertices[1]));
}

TEST(ThreeConnected, WitnessHasMinimumSize) {
  // A path has a cut vertex; two disjoint edges are disconnected outright.
  const ThreeConnectivity path = is_3_connected(Graph(3, {Edge(0, 1), Edge(1, 2)}));
  ASSERT_TRUE(path.witness);
  EXPECT_EQ(path.witness->vertices, std::vector<VertexId>{1});
  const ThreeConnectivity split = is_3_connected(Graph(4, {Edge(0, 1), Edge(2, 3)}));
  ASSERT_TRUE(split.witness);
  EXPECT_TRUE(split.witness->vertices.empty());
}

TEST(ThreeConnected, AgreesWithNaiveDeletionOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + trial % 10;
    const double p = 0.3 + 0.6 * (trial % 7) / 6.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const ThreeConnectivity r = is_3_connected(g);
    ASSERT_EQ(r.three_connected, oracle::three_connected(oracle::to_matrix(g))) << write_graph6(g);
    if (!r) {
      ASSERT_TRUE(r.witness);
      EXPECT_FALSE(is_connected(delete_vertices(g, std::span<const VertexId>(r.witness->vertices))));
    }
  }
}

TEST(ThreeConnected, DecompositionFactorsStayThreeConnected) {
  std::mt19937_64 rng(23);
  int decomposed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int k = 4 + static_cast<int>(rng() % 3);
    const int r = 2 + static_cast<int>(rng() % 3);
    Graph g = make_family({Family::clique_sum_chain, {k, r}});
    // Glue a random 3-connected graph onto a triangle of the chain when it has one.
    const Graph extra = random_3_connected(6 + static_cast<int>(rng() % 3), 12, rng());
    for (const Edge& e : extra.edges()) {
      const std::vector<Triangle> ts = triangles_through_edge(extra, e);
      if (ts.empty()) continue;
      g = clique_sum(g, extra, {{0, 1, 2}, ts.front()}).graph;
      break;
    }
    ASSERT_TRUE(is_3_connected(g));
    for (const Triangle& t : separating_triangles(g)) {
      for (const DecompositionFactor& f : decompose_at_triangle(g, t).factors)
        ASSERT_TRUE(is_3_connected(f.graph)) << write_graph6(g);
      ++decomposed;
    }
  }
  EXPECT_GT(decomposed, 400);
}
