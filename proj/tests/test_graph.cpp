#include <gtest/gtest.h>

#include <random>

#include "n2closure/graph.hpp"
#include "test_support.hpp"

namespace n2c {
namespace {

using testing::k4_minus_edge;
using testing::path_graph;
using testing::RawGraph;
using testing::w5;

TEST(GraphTest, RejectsSelfLoopsDuplicatesAndOutOfRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), DomainError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), DomainError);
  EXPECT_THROW(Graph::from_edges(2, {{0, 1}}, {"a", "a"}), DomainError);
}

TEST(GraphTest, NeighbourListsAreSortedAndSymmetric) {
  const Graph g = Graph::from_edges(4, {{3, 0}, {2, 0}, {0, 1}, {1, 3}});
  auto n0 = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(n0.begin(), n0.end()));
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = 0; v < 4; ++v) {
      EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_FALSE(g.adjacent(u, u));
  }
  EXPECT_EQ(g.edge_count(), 4u);
}

TEST(GraphTest, ClosedNeighborhood) {
  EXPECT_EQ(closed_neighborhood(Graph::complete(3), 0), (VertexSet{0, 1, 2}));
  EXPECT_EQ(closed_neighborhood(path_graph(3), 0), (VertexSet{0, 1}));
  EXPECT_EQ(closed_neighborhood(testing::star(3), 0), (VertexSet{0, 1, 2, 3}));
  EXPECT_THROW(closed_neighborhood(path_graph(3), 7), DomainError);
}

TEST(GraphTest, OpenNeighborhoodOfSet) {
  EXPECT_EQ(open_neighborhood_of_set(Graph::complete(3), {0}), (VertexSet{1, 2}));
  EXPECT_EQ(open_neighborhood_of_set(path_graph(4), {1, 2}), (VertexSet{0, 3}));
  EXPECT_TRUE(open_neighborhood_of_set(w5(), {}).empty());
  EXPECT_THROW(open_neighborhood_of_set(path_graph(3), {5}), DomainError);
}

TEST(GraphTest, EquivalenceClass) {
  // N[a] = N[b] = V in K4 - cd; checked against the raw edge set.
  const Graph g = k4_minus_edge();
  const RawGraph raw(g);
  EXPECT_EQ(raw.closed(0), raw.closed(1));
  EXPECT_NE(raw.closed(0), raw.closed(2));
  EXPECT_EQ(equivalence_class(g, 0), (VertexSet{0, 1}));
  EXPECT_EQ(equivalence_class(path_graph(3), 1), (VertexSet{1}));
  EXPECT_EQ(equivalence_class(Graph::complete(3), 0), (VertexSet{0, 1, 2}));
  EXPECT_THROW(equivalence_class(g, 4), DomainError);
}

TEST(GraphTest, IsolatedVertexIsItsOwnClass) {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  EXPECT_EQ(equivalence_class(g, 2), (VertexSet{2}));
}

TEST(GraphTest, Simplicial) {
  EXPECT_TRUE(is_simplicial(path_graph(3), 0));
  EXPECT_FALSE(is_simplicial(path_graph(3), 1));
  for (VertexId v = 0; v < 4; ++v) EXPECT_TRUE(is_simplicial(Graph::complete(4), v));
}

TEST(GraphTest, Sigma) {
  EXPECT_EQ(sigma(Graph::complete(3), {0, 1, 2}), 3u);
  EXPECT_EQ(sigma(Graph::complete(3), {0}), 0u);
  // {a, b, c} of W5: only ab.
  EXPECT_EQ(sigma(w5(), {2, 3, 4}), 1u);
}

TEST(GraphTest, PathSigma) {
  // ids: y0=0 x0=1 y1=2 y2=3
  EXPECT_EQ(path_sigma(Path{{0, 1, 2}}, {0, 2}), 0u);
  EXPECT_EQ(path_sigma(Path{{0, 2, 1, 3}}, {0, 2, 3}), 1u);
  EXPECT_EQ(path_sigma(Path{{4}}, {4}), 0u);
}

TEST(GraphTest, Clique) {
  EXPECT_TRUE(is_clique(Graph::complete(3), {0, 1, 2}));
  EXPECT_FALSE(is_clique(path_graph(3), {0, 2}));
  EXPECT_TRUE(is_clique(path_graph(3), {}));
  EXPECT_TRUE(is_clique(path_graph(3), {2}));
}

TEST(GraphTest, PathAndCycleValidation) {
  const Graph g = k4_minus_edge();
  EXPECT_TRUE(is_path_in(g, Path{{2, 0, 3}}));
  EXPECT_FALSE(is_path_in(g, Path{{2, 3}}));
  EXPECT_FALSE(is_path_in(g, Path{{0, 1, 0}}));
  EXPECT_FALSE(is_path_in(g, Path{}));
  EXPECT_TRUE(is_cycle_in(g, Cycle{{0, 2, 1, 3}}));
  EXPECT_FALSE(is_cycle_in(g, Cycle{{0, 2, 3, 1}}));  // needs cd
  EXPECT_FALSE(is_cycle_in(g, Cycle{{0, 1}}));
  EXPECT_THROW(validate(g, Cycle{{0, 2, 3}}), DomainError);
}

TEST(GraphTest, CanonicalCycleIsRotationAndReflectionInvariant) {
  const Cycle c{{3, 1, 4, 0, 2}};
  const Cycle expect = c.canonical();
  EXPECT_EQ(expect.vertices.front(), 0u);
  Cycle rot = c;
  for (std::size_t k = 0; k < c.length(); ++k) {
    std::rotate(rot.vertices.begin(), rot.vertices.begin() + 1, rot.vertices.end());
    EXPECT_EQ(rot.canonical(), expect);
    Cycle rev{{rot.vertices.rbegin(), rot.vertices.rend()}};
    EXPECT_EQ(rev.canonical(), expect);
  }
}

TEST(GraphTest, Connectivity) {
  EXPECT_TRUE(is_connected(path_graph(5)));
  const Graph g = Graph::from_edges(4, {{0, 1}, {2, 3}}, {"p", "q", "r", "s"});
  EXPECT_FALSE(is_connected(g));
  try {
    require_connected(g);
    FAIL() << "expected DisconnectedError";
  } catch (const DisconnectedError& e) {
    EXPECT_EQ(e.first_representative(), 0u);
    EXPECT_EQ(e.second_representative(), 2u);
    EXPECT_NE(std::string(e.what()).find("'r'"), std::string::npos);
  }
}

// Facts about neighbourhood classes on random graphs, against the raw edge
// set.
TEST(GraphProperty, ClassesPartitionVerticesAndAreCliques) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    const Graph g = random_graph(n, 0.3 + 0.1 * (trial % 5), rng());
    const RawGraph raw(g);
    std::vector<int> owner(n, -1);
    for (VertexId x = 0; x < n; ++x) {
      const VertexSet cls = equivalence_class(g, x);
      ASSERT_TRUE(cls.contains(x));
      ASSERT_TRUE(is_clique(g, cls));
      for (VertexId y = 0; y < n; ++y) {
        ASSERT_EQ(cls.contains(y), raw.closed(x) == raw.closed(y));
        ASSERT_EQ(g.adjacent(x, y), raw.adj(x, y));
      }
      for (VertexId y : cls) {
        ASSERT_EQ(closed_neighborhood(g, y), closed_neighborhood(g, x));
      }
      for (VertexId u : open_neighborhood_of_set(g, cls)) {
        for (VertexId v : cls) ASSERT_TRUE(g.adjacent(u, v));
      }
      // Partition: every vertex belongs to exactly one class.
      const int id = static_cast<int>(cls.front());
      for (VertexId y : cls) {
        ASSERT_TRUE(owner[y] == -1 || owner[y] == id);
        owner[y] = id;
      }
    }
  }
}

TEST(GraphProperty, PathSigmaBoundedByPathEdges) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto t = testing::random_triple(rng);
    EXPECT_LE(path_sigma(t.path, t.ys), t.path.size() - 1);
  }
}

}  // namespace
}  // namespace n2c
