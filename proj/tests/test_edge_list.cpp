#include <gtest/gtest.h>

#include <random>

#include "n2closure/edge_list.hpp"
#include "n2closure/oracle.hpp"
#include "test_support.hpp"

#ifndef N2C_DATA_DIR
#error "N2C_DATA_DIR must point at the fixture directory"
#endif

namespace n2c {
namespace {

std::set<std::pair<std::string, std::string>> labelled_edges(const Graph& g) {
  std::set<std::pair<std::string, std::string>> out;
  for (const Edge& e : g.edges()) {
    auto a = g.label(e.u);
    auto b = g.label(e.v);
    if (b < a) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

TEST(EdgeListTest, ParsesCommentsAndBlankLines) {
  const auto doc = parse_edge_list("# header\n\na b\n  b c  \n# tail\n");
  EXPECT_EQ(doc.graph.vertex_count(), 3u);
  EXPECT_EQ(doc.graph.edge_count(), 2u);
  EXPECT_EQ(doc.graph.label(0), "a");
  EXPECT_EQ(doc.graph.label(2), "c");
  EXPECT_FALSE(doc.witness_vertex);
}

TEST(EdgeListTest, LabelsInternedInOrderOfFirstOccurrence) {
  const auto doc = parse_edge_list("z y\nvertex q\ny x\n");
  ASSERT_EQ(doc.graph.vertex_count(), 4u);
  EXPECT_EQ(doc.graph.labels(),
            (std::vector<std::string>{"z", "y", "q", "x"}));
  EXPECT_EQ(doc.graph.degree(2), 0u);
}

TEST(EdgeListTest, HandlesCarriageReturns) {
  const auto doc = parse_edge_list("a b\r\nb c\r\n");
  EXPECT_EQ(doc.graph.edge_count(), 2u);
  EXPECT_TRUE(doc.graph.find("c"));
}

TEST(EdgeListTest, WitnessAnnotation) {
  const auto doc = parse_edge_list("# witness-vertex b\na b\n");
  ASSERT_TRUE(doc.witness_vertex);
  EXPECT_EQ(*doc.witness_vertex, "b");
  EXPECT_THROW(parse_edge_list("# witness-vertex q\na b\n"), ParseError);
}

TEST(EdgeListTest, ErrorsCarryLineNumbers) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(std::string(e.what()).rfind("line 2:", 0), 0u);
  }
  try {
    parse_edge_list("a b\n\nc c\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  try {
    parse_edge_list("a b\nb a\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list("vertex\n"), ParseError);
  EXPECT_THROW(parse_edge_list("solo\n"), ParseError);
}

TEST(EdgeListTest, MissingFile) {
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), DomainError);
}

TEST(EdgeListTest, Fixtures) {
  const auto w5 = read_edge_list_file(std::string(N2C_DATA_DIR) + "/w5.txt");
  EXPECT_EQ(labelled_edges(w5.graph), labelled_edges(testing::w5()));
  EXPECT_EQ(w5.graph.labels(), testing::w5().labels());
  const auto k4 =
      read_edge_list_file(std::string(N2C_DATA_DIR) + "/k4_minus_edge.txt");
  EXPECT_EQ(k4.graph, testing::k4_minus_edge());
}

TEST(EdgeListTest, RoundTripPreservesLabelsEdgesAndWitness) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = random_graph(n, 0.35, rng());
    const std::optional<VertexId> w =
        trial % 2 ? std::optional<VertexId>(static_cast<VertexId>(rng() % n))
                  : std::nullopt;
    const auto text = to_edge_list(g, w);
    const auto doc = parse_edge_list(text);
    ASSERT_EQ(doc.graph, g) << text;
    ASSERT_EQ(doc.graph.labels(), g.labels());
    ASSERT_EQ(doc.witness_vertex.has_value(), w.has_value());
    if (w) {
      ASSERT_EQ(*doc.witness_vertex, g.label(*w));
    }
    // Writing is deterministic.
    ASSERT_EQ(to_edge_list(doc.graph, w), text);
  }
}

}  // namespace
}  // namespace n2c
