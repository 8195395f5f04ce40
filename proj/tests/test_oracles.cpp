#include "brute_force.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/harness.hpp"
#include "cliquegame/oracles.hpp"

#include <gtest/gtest.h>

using namespace cliquegame;

namespace {

Graph p4() { return path_graph(4); }
Graph c5() { return cycle_graph(5); }

std::vector<std::vector<Vertex>> member_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.members());
  return out;
}

}  // namespace

TEST(Oracles, GoldenSmallGraphs) {
  EXPECT_EQ(max_clique_size(c5()), 2u);
  EXPECT_EQ(max_clique_size(p4()), 2u);
  EXPECT_EQ(max_clique_size(cycle_graph(4)), 2u);

  EXPECT_EQ(max_biclique_size(p4()), 3u);
  EXPECT_EQ(max_biclique_size(c5()), 3u);
  EXPECT_EQ(max_biclique_size(cycle_graph(4)), 4u);

  EXPECT_EQ(max_edge_biclique(p4()), 2u);
  EXPECT_EQ(max_edge_biclique(cycle_graph(4)), 4u);
  EXPECT_EQ(max_edge_biclique(c5()), 2u);
}

TEST(Oracles, MaximalCliqueExamples) {
  EXPECT_EQ(member_lists(maximal_cliques(c5())),
            (std::vector<std::vector<Vertex>>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
  EXPECT_EQ(member_lists(maximal_cliques(p4())), (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(member_lists(maximal_cliques(complete_graph(4))), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
}

TEST(Oracles, EmptyGraph) {
  Graph g(3, {});
  EXPECT_EQ(max_clique_size(g), 1u);
  EXPECT_EQ(max_biclique_size(g), 1u);
  EXPECT_EQ(max_edge_biclique(g), 0u);
  EXPECT_EQ(maximal_cliques(g).size(), 3u);
}

TEST(Oracles, Limits) {
  Graph big = random_graph(17, 0.5, 1);
  EXPECT_THROW(max_biclique_size(big), OracleLimitError);
  EXPECT_THROW(max_edge_biclique(big), OracleLimitError);
  EXPECT_NO_THROW(max_clique_size(big));
  EXPECT_THROW(max_clique_size(random_graph(21, 0.5, 1)), OracleLimitError);
  EXPECT_THROW(max_clique_size(big, 10), OracleLimitError);
  EXPECT_THROW(maximal_cliques(c5(), 4), OracleLimitError);
}

TEST(Oracles, BipartiteBicliquesAreCrossOnly) {
  // K_{2,2} declared bipartite, plus an isolated left vertex.
  Graph g(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}}, 3);
  EXPECT_EQ(max_biclique_size(g), 4u);
  EXPECT_EQ(max_edge_biclique(g), 4u);
  // A star declared with the center on the right: only b = {center} is allowed.
  Graph s(4, {{0, 3}, {1, 3}, {2, 3}}, 3);
  EXPECT_EQ(max_biclique_size(s), 4u);
  EXPECT_EQ(max_edge_biclique(s), 3u);
}

TEST(Oracles, MatchBruteForceAllSmallGraphs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : all_labeled_graphs(n)) {
      auto bc = bf::max_biclique(g);
      ASSERT_EQ(max_clique_size(g), bf::max_clique(g));
      ASSERT_EQ(max_biclique_size(g), bc.size);
      ASSERT_EQ(max_edge_biclique(g), bc.edges);
      ASSERT_EQ(member_lists(maximal_cliques(g)), bf::maximal_cliques(g));
    }
  }
}

TEST(Oracles, MatchBruteForceRandomUpToTen) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 6 + seed % 5;
    const double p = 0.2 + 0.1 * static_cast<double>(seed % 7);
    Graph g = random_graph(n, p, seed);
    auto bc = bf::max_biclique(g);
    EXPECT_EQ(max_clique_size(g), bf::max_clique(g));
    EXPECT_EQ(max_biclique_size(g), bc.size);
    EXPECT_EQ(max_edge_biclique(g), bc.edges);
    EXPECT_EQ(member_lists(maximal_cliques(g)), bf::maximal_cliques(g));
    Graph b = random_bipartite_graph(n / 2, n - n / 2, p, seed);
    auto bb = bf::max_biclique(b);
    EXPECT_EQ(max_biclique_size(b), bb.size);
    EXPECT_EQ(max_edge_biclique(b), bb.edges);
  }
}

TEST(Oracles, CliqueAtMostBiclique) {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const Graph& g : graph_catalog(catalog::AllGraphs{n})) {
      ASSERT_LE(max_clique_size(g), max_biclique_size(g));
    }
  }
  for (const Graph& g : graph_catalog(catalog::Random{7, 8, 0.5, 200}, 3)) {
    EXPECT_LE(max_clique_size(g), max_biclique_size(g));
  }
}
