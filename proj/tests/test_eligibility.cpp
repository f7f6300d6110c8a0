#include <gtest/gtest.h>

#include "n2closure/eligibility.hpp"
#include "test_support.hpp"

namespace n2c {
namespace {

using testing::k4_minus_edge;
using testing::path_graph;
using testing::w5;

TEST(EligibilityTest, K4MinusEdge) {
  const auto r = classify_vertex(k4_minus_edge(), 0);
  EXPECT_EQ(r.class_bar_x, (VertexSet{0, 1}));
  EXPECT_EQ(r.neighborhood_of_class, (VertexSet{2, 3}));
  EXPECT_EQ(r.sigma_of_neighborhood, 0u);
  EXPECT_EQ(r.chi2, 0);
  EXPECT_FALSE(r.simplicial);
  EXPECT_TRUE(r.n_eligible);
  EXPECT_TRUE(r.n2_eligible);
}

TEST(EligibilityTest, W5TwinIsN2ButNotN) {
  const auto r = classify_vertex(w5(), 0);
  EXPECT_EQ(r.class_bar_x, (VertexSet{0, 1}));
  EXPECT_EQ(r.neighborhood_of_class, (VertexSet{2, 3, 4}));
  EXPECT_EQ(r.sigma_of_neighborhood, 1u);
  EXPECT_EQ(r.chi2, 1);
  EXPECT_FALSE(r.n_eligible);
  EXPECT_TRUE(r.n2_eligible);
  EXPECT_EQ(classify_vertex(w5(), 1), [&] {
    auto copy = r;
    copy.vertex = 1;
    return copy;
  }());
}

TEST(EligibilityTest, PathMiddleIsNeither) {
  const auto r = classify_vertex(path_graph(3), 1);
  EXPECT_EQ(r.class_bar_x, (VertexSet{1}));
  EXPECT_EQ(r.neighborhood_of_class, (VertexSet{0, 2}));
  EXPECT_EQ(r.chi2, 0);
  EXPECT_FALSE(r.n_eligible);
  EXPECT_FALSE(r.n2_eligible);
}

TEST(EligibilityTest, SimplicialVerticesAreNeverEligible) {
  const auto all = classify_all(Graph::complete(5));
  for (const auto& r : all) {
    EXPECT_TRUE(r.simplicial);
    EXPECT_FALSE(r.n2_eligible);
    EXPECT_FALSE(r.nk_eligible(100));
  }
}

TEST(EligibilityTest, ChiK) {
  // sigma(N(class)) = 0, 1 and 3 respectively.
  EXPECT_EQ(chi_k(k4_minus_edge(), 0, 2), 0u);
  EXPECT_EQ(chi_k(w5(), 0, 2), 1u);
  // Vertex 0 joined to the path 1-2-3-4: sigma(N(class)) = 3.
  const Graph h = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(classify_vertex(h, 0).sigma_of_neighborhood, 3u);
  EXPECT_EQ(chi_k(h, 0, 2), 2u);
  EXPECT_EQ(chi_k(h, 0, 5), 3u);
  EXPECT_THROW(chi_k(h, 0, 0), DomainError);
  EXPECT_THROW(nk_eligible(h, 0, 0), DomainError);
}

TEST(EligibilityTest, LocalCompletion) {
  const auto k4 = local_completion(k4_minus_edge(), 0);
  EXPECT_EQ(k4.added_edges, (std::vector<Edge>{{2, 3}}));
  EXPECT_EQ(k4.graph_x.edge_count(), 6u);
  const auto k5 = local_completion(w5(), 0);
  EXPECT_EQ(k5.added_edges, (std::vector<Edge>{{2, 4}, {3, 4}}));
  EXPECT_EQ(k5.graph_x.edge_count(), 10u);
  EXPECT_TRUE(local_completion(Graph::complete(3), 0).added_edges.empty());
  EXPECT_THROW(local_completion(w5(), 9), DomainError);
}

TEST(EligibilityTest, ClassifyAllMatchesClassifyVertex) {
  for (const Graph& g : testing::ensemble(120, 17)) {
    const auto all = classify_all(g);
    ASSERT_EQ(all.size(), g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      ASSERT_EQ(all[v], classify_vertex(g, v));
    }
  }
}

// Eligibility flags recomputed from raw closed neighbourhoods.
TEST(EligibilityProperty, FlagsAgreeWithRawComputation) {
  for (const Graph& g : testing::ensemble(200, 23)) {
    const testing::RawGraph raw(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      std::set<VertexId> cls;
      for (VertexId y = 0; y < g.vertex_count(); ++y) {
        if (raw.closed(y) == raw.closed(x)) cls.insert(y);
      }
      std::set<VertexId> nb;
      for (VertexId y : cls) {
        for (VertexId z : raw.closed(y)) {
          if (!cls.count(z)) nb.insert(z);
        }
      }
      std::size_t sig = 0;
      bool simplicial = true;
      for (VertexId a : nb) {
        for (VertexId b : nb) {
          if (a < b && raw.adj(a, b)) ++sig;
        }
      }
      const auto cx = raw.closed(x);
      for (VertexId a : cx) {
        for (VertexId b : cx) {
          if (a != b && !raw.adj(a, b)) simplicial = false;
        }
      }
      const auto r = classify_vertex(g, x);
      ASSERT_EQ(r.simplicial, simplicial);
      ASSERT_EQ(r.class_bar_x.size(), cls.size());
      ASSERT_EQ(r.neighborhood_of_class.size(), nb.size());
      ASSERT_EQ(r.sigma_of_neighborhood, sig);
      for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t chi = std::min(sig, k);
        ASSERT_EQ(nk_eligible(g, x, k),
                  !simplicial && cls.size() + chi >= nb.size());
      }
      ASSERT_EQ(r.n_eligible, !simplicial && cls.size() >= nb.size());
      ASSERT_EQ(r.n2_eligible, r.nk_eligible(2));
      // N-eligible implies N2-eligible implies N3-eligible.
      ASSERT_TRUE(!r.n_eligible || r.n2_eligible);
      ASSERT_TRUE(!r.n2_eligible || r.nk_eligible(3));
    }
  }
}

// B_x is exactly the set of non-edges inside N[x], and also inside N(class).
TEST(EligibilityProperty, CompletionEdgesAreNonEdgesOfClosedNeighbourhood) {
  for (const Graph& g : testing::ensemble(200, 29)) {
    const testing::RawGraph raw(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      std::vector<Edge> expect;
      const auto cx = raw.closed(x);
      for (VertexId a : cx) {
        for (VertexId b : cx) {
          if (a < b && !raw.adj(a, b)) expect.push_back({a, b});
        }
      }
      const auto res = local_completion(g, x);
      ASSERT_EQ(res.added_edges, expect);
      const auto nb = open_neighborhood_of_set(g, equivalence_class(g, x));
      for (const Edge& e : res.added_edges) {
        ASSERT_TRUE(nb.contains(e.u) && nb.contains(e.v));
      }
      ASSERT_TRUE(is_clique(res.graph_x, closed_neighborhood(g, x)));
      ASSERT_EQ(res.graph_x.edge_count(), g.edge_count() + expect.size());
    }
  }
}

// Fact 1: the class is a clique fully joined to its neighbourhood and
// N[class] = N[x]. Fact 2: completion keeps N[x'] for x' in the class,
// keeps simplicial vertices simplicial, and makes the class simplicial.
TEST(EligibilityProperty, ClassFacts) {
  for (const Graph& g : testing::ensemble(200, 31)) {
    const VertexSet simp = simplicial_vertices(g);
    for (VertexId x = 0; x < g.vertex_count(); ++x) {
      const auto r = classify_vertex(g, x);
      const VertexSet& cls = r.class_bar_x;
      ASSERT_TRUE(is_clique(g, cls));
      for (VertexId u : r.neighborhood_of_class) {
        for (VertexId v : cls) ASSERT_TRUE(g.adjacent(u, v));
      }
      ASSERT_EQ(set_union(cls, r.neighborhood_of_class),
                closed_neighborhood(g, x));
      const Graph gx = local_completion(g, x).graph_x;
      for (VertexId y : cls) {
        ASSERT_EQ(closed_neighborhood(gx, y), closed_neighborhood(g, y));
      }
      const VertexSet simp_x = simplicial_vertices(gx);
      ASSERT_TRUE(simp.is_subset_of(simp_x));
      ASSERT_TRUE(cls.is_subset_of(simp_x));
    }
  }
}

}  // namespace
}  // namespace n2c
