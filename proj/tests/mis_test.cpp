#include <random>
#include <set>

#include <gtest/gtest.h>

#include "cactus/mis.hpp"
#include "support.hpp"

namespace cactus {
namespace {

using testing::make_graph;

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return make_graph(n, edges);
}

TEST(EnumerateTest, Examples) {
  EXPECT_EQ(enumerate_mis(cycle(5)), SizeDistribution(SizeDistribution::Map{{2, 5}}));
  EXPECT_EQ(enumerate_mis(cycle(6)), SizeDistribution(SizeDistribution::Map{{2, 3}, {3, 2}}));
  EXPECT_EQ(enumerate_mis(build_family(family_spec(FamilyId::Triangular), 2)),
            SizeDistribution(SizeDistribution::Map{{1, 1}, {2, 4}}));
  EXPECT_EQ(enumerate_mis(Graph{}), SizeDistribution(SizeDistribution::Map{{0, 1}}));
  EXPECT_EQ(enumerate_mis(make_graph(3, {})), SizeDistribution(SizeDistribution::Map{{3, 1}}));
}

TEST(EnumerateTest, CountExamples) {
  EXPECT_EQ(mis_count(build_family(family_spec(FamilyId::Diamond), 3)), 7);
  EXPECT_EQ(mis_count(build_family(family_spec(FamilyId::Square), 4)), 16);
  EXPECT_EQ(mis_count(build_family(family_spec(FamilyId::OrthoHexagonal), 3)), 72);
}

TEST(EnumerateTest, VertexLimit) {
  Graph g = build_family(family_spec(FamilyId::Triangular), 40);
  ASSERT_EQ(g.vertex_count(), 81u);
  try {
    enumerate_mis(g);
    FAIL() << "expected VertexLimitExceeded";
  } catch (const VertexLimitExceeded& e) {
    EXPECT_EQ(e.vertices(), 81u);
    EXPECT_EQ(e.limit(), 64u);
  }
  std::vector<Edge> star;
  for (VertexId v = 1; v < 81; ++v) star.emplace_back(0, v);
  EXPECT_EQ(mis_count(make_graph(81, star), OracleOptions{100}), 2);
  EXPECT_THROW(mis_count(cycle(10), OracleOptions{9}), VertexLimitExceeded);
}

TEST(EnumerateTest, Deterministic) {
  Graph g = build_aux(family_spec(FamilyId::ParaHexagonal), AuxKind::Tilde, 4);
  auto first = enumerate_mis(g);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(enumerate_mis(g), first);
}

TEST(EnumerateTest, MatchesIsMaximalIndependentFilter) {
  // Subset filter through the library predicate, up to 16 vertices.
  for (const GraphKey& key : testing::generated_keys(16)) {
    Graph g = build_graph(key);
    SizeDistribution expected;
    const std::size_t n = g.vertex_count();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<VertexId> s;
      for (VertexId v = 0; v < n; ++v) {
        if (mask >> v & 1) s.push_back(v);
      }
      if (is_maximal_independent(g, s)) expected.add(static_cast<int>(s.size()), 1);
    }
    EXPECT_EQ(enumerate_mis(g), expected) << describe(key);
  }
}

TEST(EnumerateTest, MatchesBothOraclesOnRandomGraphs) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 18;
    const double p = 0.1 + 0.05 * (trial % 10);
    Graph g = testing::random_graph(rng, n, p);
    auto expected = testing::subset_filter_mis(g);
    EXPECT_EQ(enumerate_mis(g), expected) << "trial " << trial;
    EXPECT_EQ(testing::complement_clique_mis(g), expected) << "trial " << trial;
  }
}

TEST(ForEachMisTest, VisitsEachSetOnceInIncreasingOrder) {
  Graph g = build_family(family_spec(FamilyId::MetaPentagonal), 3);
  std::set<std::vector<VertexId>> seen;
  detail::for_each_mis(g, [&](std::span<const VertexId> s) {
    std::vector<VertexId> v(s.begin(), s.end());
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_TRUE(is_maximal_independent(g, s));
    EXPECT_TRUE(seen.insert(v).second);
  });
  EXPECT_EQ(seen.size(), 34u);
}

TEST(IsMaximalIndependentTest, Examples) {
  Graph c4 = cycle(4);
  std::vector<VertexId> opposite{0, 2};
  std::vector<VertexId> single{0};
  EXPECT_TRUE(is_maximal_independent(c4, opposite));
  EXPECT_FALSE(is_maximal_independent(c4, single));
  Graph k2 = make_graph(2, {{0, 1}});
  std::vector<VertexId> both{0, 1};
  EXPECT_FALSE(is_maximal_independent(k2, both));
  std::vector<VertexId> none;
  EXPECT_TRUE(is_maximal_independent(Graph{}, none));
  std::vector<VertexId> bad{7};
  EXPECT_THROW(is_maximal_independent(k2, bad), std::out_of_range);
}

TEST(DisjointUnionTest, ConvolutionLaw) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    Graph a = testing::random_graph(rng, 3 + trial % 6, 0.35);
    Graph b = testing::random_graph(rng, 4 + trial % 5, 0.5);
    EXPECT_EQ(enumerate_mis(disjoint_union(a, b)), enumerate_mis(a).convolve(enumerate_mis(b)));
  }
}

TEST(SizeDistributionTest, Arithmetic) {
  SizeDistribution a({{1, 2}, {2, 3}});
  SizeDistribution b({{0, 1}, {2, 1}});
  EXPECT_EQ(a.total(), 5);
  EXPECT_EQ(a.min_size(), 1);
  EXPECT_EQ(a.max_size(), 2);
  EXPECT_EQ(a.at(7), 0);
  EXPECT_EQ(a.to_string(), "{1: 2, 2: 3}");
  EXPECT_EQ(a.shifted(2), SizeDistribution(SizeDistribution::Map{{3, 2}, {4, 3}}));
  EXPECT_EQ(a.scaled(2), SizeDistribution(SizeDistribution::Map{{1, 4}, {2, 6}}));
  EXPECT_EQ(a + b, SizeDistribution(SizeDistribution::Map{{0, 1}, {1, 2}, {2, 4}}));
  EXPECT_EQ(a.convolve(b), SizeDistribution(SizeDistribution::Map{{1, 2}, {2, 3}, {3, 2}, {4, 3}}));
  SizeDistribution z;
  z.set(3, 0);
  EXPECT_TRUE(z.empty());
  z.add(3, 5);
  z.add(3, -5);
  EXPECT_TRUE(z.empty());
  EXPECT_EQ(SizeDistribution().to_string(), "{}");
  EXPECT_EQ(SizeDistribution().max_size(), 0);
}

}  // namespace
}  // namespace cactus
