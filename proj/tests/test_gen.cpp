#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"

using namespace mconvex;

namespace {

GenSpec spec(GenKind kind, int n, int k, std::uint64_t seed) {
  GenSpec s;
  s.kind = kind;
  s.n = n;
  s.k = k;
  s.seed = seed;
  return s;
}

}  // namespace

TEST(Generate, OneTreeIsATree) {
  const auto g = generate(spec(GenKind::KTree, 5, 1, 3));
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(connected_components(g).size(), 1u);
}

TEST(Generate, TwoTreeHasNoArcs) {
  const auto g = generate(spec(GenKind::KTree, 10, 2, 11));
  EXPECT_EQ(g.edge_count(), 3 + 2 * 7);
  const auto csg = clique_separator_graph(g);
  EXPECT_TRUE(csg.arcs.empty());
  EXPECT_EQ(csg.cliques.size(), 8u);
  for (const auto& k : csg.cliques) EXPECT_EQ(k.size(), 3u);
}

TEST(Generate, RandomChordalSeedSeven) {
  const auto g = generate(spec(GenKind::RandomChordal, 10, 2, 7));
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_TRUE(is_chordal(g));
}

TEST(Generate, EveryKindIsChordal) {
  for (int kind = 0; kind < 4; ++kind)
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      GenSpec s = spec(static_cast<GenKind>(kind), 2 + static_cast<int>(seed % 30), 1 + static_cast<int>(seed % 4), seed);
      if (s.kind == GenKind::KTree) s.n = std::max(s.n, s.k + 1);
      s.density = static_cast<double>(seed % 11) / 10.0;
      const auto g = generate(s);
      ASSERT_TRUE(is_chordal(g)) << to_string(s.kind) << " seed " << seed;
    }
}

TEST(Generate, SameSeedSameBytes) {
  for (int kind = 0; kind < 4; ++kind) {
    const GenSpec s = spec(static_cast<GenKind>(kind), 25, 3, 99);
    EXPECT_EQ(serialize(generate(s)), serialize(generate(s)));
  }
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
    distinct.insert(serialize(generate(spec(GenKind::RandomChordal, 12, 2, seed))));
  EXPECT_GT(distinct.size(), 15u);
}

TEST(Generate, WeightsStayInRange) {
  GenSpec s = spec(GenKind::Tree, 200, 1, 5);
  s.weight_min = -3;
  s.weight_max = 2;
  const auto g = generate(s);
  bool negative = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    EXPECT_GE(g.weight(v), -3);
    EXPECT_LE(g.weight(v), 2);
    negative = negative || g.weight(v) < 0;
  }
  EXPECT_TRUE(negative);
}

TEST(Generate, RejectsBadParameters) {
  EXPECT_THROW(generate(spec(GenKind::KTree, 2, 2, 0)), InputError);
  EXPECT_THROW(generate(spec(GenKind::Tree, -1, 1, 0)), InputError);
  GenSpec s = spec(GenKind::RandomChordal, 5, 1, 0);
  s.density = 1.5;
  EXPECT_THROW(generate(s), InputError);
  s.density = 0.5;
  s.weight_min = 4;
  s.weight_max = 3;
  EXPECT_THROW(generate(s), InputError);
  EXPECT_THROW(parse_gen_kind("grid"), InputError);
  EXPECT_EQ(parse_gen_kind("split_like"), GenKind::SplitLike);
  EXPECT_EQ(generate(spec(GenKind::RandomChordal, 0, 1, 0)).vertex_count(), 0);
}
