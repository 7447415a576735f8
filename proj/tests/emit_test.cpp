#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cactus/emit.hpp"
#include "support.hpp"

namespace cactus {
namespace {

TEST(DotTest, ExactTextForTriangle) {
  Graph g = build_family(family_spec(FamilyId::Triangular), 1);
  EXPECT_EQ(to_dot(g, "T_1"),
            "graph T_1 {\n"
            "  0 [label=\"b1_p1\"];\n"
            "  1 [label=\"b1_p2\"];\n"
            "  2 [label=\"b1_p3\"];\n"
            "  0 -- 1;\n"
            "  0 -- 2;\n"
            "  1 -- 2;\n"
            "}\n");
}

TEST(DotTest, RoundTripsEveryGeneratedGraph) {
  for (const GraphKey& key : testing::generated_keys(45)) {
    Graph g = build_graph(key);
    Graph back = from_dot(to_dot(g));
    ASSERT_EQ(back.vertex_count(), g.vertex_count()) << describe(key);
    EXPECT_EQ(back.edges(), g.edges()) << describe(key);
    for (VertexId v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(back.label(v), g.label(v));
  }
}

TEST(DotTest, EmptyGraph) {
  Graph g = build_family(family_spec(FamilyId::Square), 0);
  EXPECT_EQ(to_dot(g), "graph G {\n}\n");
  EXPECT_TRUE(from_dot(to_dot(g)).empty());
}

TEST(DotTest, RejectsMalformedInput) {
  EXPECT_THROW(from_dot("digraph G {\n}\n"), std::invalid_argument);
  EXPECT_THROW(from_dot("graph G {\n  0 [label=\"a\"];\n"), std::invalid_argument);
  EXPECT_THROW(from_dot("graph G {\n  1 [label=\"a\"];\n}\n"), std::invalid_argument);
  EXPECT_THROW(from_dot("graph G {\n  0 [label=\"a\"];\n  0 -- 1;\n}\n"), std::invalid_argument);
  EXPECT_THROW(from_dot("graph G {\n  0 -> 1;\n}\n"), std::invalid_argument);
  EXPECT_THROW(from_dot("graph G {\n}\nextra\n"), std::invalid_argument);
}

TEST(JsonTest, Fields) {
  GraphKey key{FamilyId::MetaPentagonal, GraphKind::Tilde, 0};
  auto j = nlohmann::json::parse(to_json(build_graph(key), key));
  EXPECT_EQ(j["family"], "meta-pentagonal");
  EXPECT_EQ(j["aux"], "tilde");
  EXPECT_EQ(j["n"], 0);
  EXPECT_EQ(j["vertex_count"], 4);
  EXPECT_EQ(j["edge_count"], 3);
  EXPECT_EQ(j["edges"].size(), 3u);
  EXPECT_EQ(j["labels"]["0"], "root");

  GraphKey fam{FamilyId::Diamond, GraphKind::Family, 2};
  auto f = nlohmann::json::parse(to_json(build_graph(fam), fam));
  EXPECT_EQ(f["aux"], "none");
  EXPECT_EQ(f["edges"][0], nlohmann::json::array({0, 1}));
  EXPECT_EQ(f["labels"].size(), 7u);
}

TEST(EdgeListTest, OneLinePerEdge) {
  Graph g = build_family(family_spec(FamilyId::Diamond), 3);
  std::string text = to_edge_list(g);
  std::istringstream in(text);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    int u = -1;
    int v = -1;
    std::istringstream(line) >> u >> v;
    EXPECT_TRUE(g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v)));
    ++lines;
  }
  EXPECT_EQ(lines, 12u);
  EXPECT_EQ(g.vertex_count(), 10u);
}

}  // namespace
}  // namespace cactus
