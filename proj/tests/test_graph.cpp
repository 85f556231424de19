#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"

using namespace mconvex;
using fx::ids;

TEST(WeightedGraph, RejectsBadInput) {
  std::vector<Edge> loop{{0, 0}};
  EXPECT_THROW(WeightedGraph(2, loop), InputError);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(WeightedGraph(2, dup), InputError);
  std::vector<Edge> range{{0, 2}};
  EXPECT_THROW(WeightedGraph(2, range), InputError);
  EXPECT_THROW(WeightedGraph(2, {}, {1}), InputError);
}

TEST(WeightedGraph, BasicQueries) {
  const auto g = fx::fig7();
  EXPECT_EQ(g.vertex_count(), 8);
  EXPECT_EQ(g.edge_count(), 14);
  EXPECT_TRUE(g.adjacent(fx::v(2), fx::v(6)));
  EXPECT_FALSE(g.adjacent(fx::v(1), fx::v(6)));
  EXPECT_EQ(g.weight_of(ids({1, 2, 6})), 5);
  EXPECT_TRUE(g.is_clique(ids({2, 4, 6, 7})));
  EXPECT_FALSE(g.is_clique(ids({2, 4, 6, 8})));
}

TEST(Neighbors, KnownCases) {
  EXPECT_EQ(neighbors(fx::fig7(), ids({2})), ids({1, 3, 4, 5, 6, 7, 8}));
  const auto g = fx::fig7();
  EXPECT_TRUE(neighbors(g, g.all_vertices()).empty());
  EXPECT_EQ(neighbors(fx::fig6(), ids({1})), ids({2}));
  EXPECT_THROW(neighbors(g, VertexSet{8}), InputError);
}

TEST(ConnectedComponents, KnownCases) {
  const auto g = fx::fig7();
  const auto comps = connected_components(g, ids({2}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], ids({1}));
  EXPECT_EQ(comps[1], ids({3, 4, 5, 6, 7, 8}));
  const auto whole = connected_components(g);
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_EQ(whole[0], g.all_vertices());
  const auto six = connected_components(fx::fig6(), ids({2, 4}));
  ASSERT_EQ(six.size(), 3u);
  EXPECT_EQ(six[0], ids({1}));
  EXPECT_EQ(six[1], ids({3}));
  EXPECT_EQ(six[2], ids({5}));
}

TEST(ConnectedComponents, PartitionProperty) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = fx::random_graph(seed, 12);
    VertexSet removed;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng() % 4 == 0) removed.push_back(v);
    VertexSet all;
    for (const auto& c : connected_components(g, removed)) {
      EXPECT_TRUE(set_intersection(all, c).empty());
      EXPECT_TRUE(set_intersection(removed, c).empty());
      all = set_union(all, c);
    }
    EXPECT_EQ(all, set_difference(g.all_vertices(), removed));
  }
}

TEST(NeighborsProperty, DisjointFromInput) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = fx::random_graph(seed, 12);
    VertexSet s;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng() % 3 == 0) s.push_back(v);
    EXPECT_TRUE(set_intersection(neighbors(g, s), s).empty());
  }
}

TEST(ChordlessPath, Predicate) {
  const auto g = fx::fig7();
  EXPECT_TRUE(is_chordless_path(g, ids({1, 2, 6})));
  EXPECT_TRUE(is_chordless_path(g, VertexPath{fx::v(3)}));
  EXPECT_FALSE(is_chordless_path(g, VertexPath{fx::v(1), fx::v(2), fx::v(7), fx::v(6)}));
  EXPECT_FALSE(is_chordless_path(g, VertexPath{fx::v(1), fx::v(6)}));
  EXPECT_FALSE(is_chordless_path(g, VertexPath{fx::v(1), fx::v(2), fx::v(1)}));
}

TEST(ChordlessPath, Extraction) {
  const auto g = fx::fig7();
  EXPECT_EQ(extract_chordless_path(g, VertexPath{fx::v(3), fx::v(4), fx::v(2)}), (VertexPath{fx::v(3), fx::v(2)}));
  EXPECT_EQ(extract_chordless_path(g, VertexPath{fx::v(1), fx::v(2), fx::v(7), fx::v(6)}),
            (VertexPath{fx::v(1), fx::v(2), fx::v(6)}));
  const VertexPath straight{fx::v(1), fx::v(2), fx::v(6)};
  EXPECT_EQ(extract_chordless_path(g, straight), straight);
  EXPECT_THROW(extract_chordless_path(g, VertexPath{fx::v(1), fx::v(6)}), InputError);
  EXPECT_THROW(extract_chordless_path(g, VertexPath{fx::v(1), fx::v(2), fx::v(1)}), InputError);
}

TEST(ChordlessPath, ExtractionFuzz) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = fx::random_graph(seed, 14);
    if (g.vertex_count() == 0) continue;
    // Random walk without revisits.
    VertexPath p{static_cast<Vertex>(rng() % static_cast<std::uint64_t>(g.vertex_count()))};
    for (int step = 0; step < 8; ++step) {
      VertexSet options;
      for (Vertex u : g.neighbors(p.back()))
        if (std::find(p.begin(), p.end(), u) == p.end()) options.push_back(u);
      if (options.empty()) break;
      p.push_back(options[rng() % options.size()]);
    }
    const auto q = extract_chordless_path(g, p);
    EXPECT_TRUE(is_chordless_path(g, q));
    EXPECT_EQ(q.front(), p.front());
    EXPECT_EQ(q.back(), p.back());
    for (Vertex x : q) EXPECT_NE(std::find(p.begin(), p.end(), x), p.end());
  }
}

TEST(InducedSubgraph, KnownCases) {
  const auto g = fx::fig7();
  const auto full = induced_subgraph(g, g.all_vertices());
  EXPECT_EQ(full.graph.edges().size(), g.edges().size());
  EXPECT_EQ(full.graph.weights(), g.weights());
  const auto sub = induced_subgraph(g, ids({2, 4, 6, 7, 8}));
  EXPECT_EQ(sub.graph.vertex_count(), 5);
  // 24 26 27 28 46 47 48 67 78
  EXPECT_EQ(sub.graph.edge_count(), 9);
  EXPECT_EQ(sub.graph.weight(sub.local(fx::v(6))), 4);
  EXPECT_EQ(sub.lift(sub.lower(ids({2, 7}))), ids({2, 7}));
  EXPECT_EQ(sub.local(fx::v(1)), -1);
  const auto empty = induced_subgraph(g, VertexSet{});
  EXPECT_EQ(empty.graph.vertex_count(), 0);
}
