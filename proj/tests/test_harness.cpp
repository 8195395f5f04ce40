#include "brute_force.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/harness.hpp"
#include "cliquegame/json_io.hpp"
#include "cliquegame/oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace cliquegame;

namespace {

bool has_input(const std::vector<GameInput>& ins, const VertexSet& a, const VertexSet& b) {
  return std::any_of(ins.begin(), ins.end(), [&](const GameInput& in) { return in.a == a && in.b == b; });
}

const GameInput* find_input(const std::vector<GameInput>& ins, const VertexSet& a, const VertexSet& b) {
  for (const auto& in : ins) {
    if (in.a == a && in.b == b) return &in;
  }
  return nullptr;
}

// Independent count of biclique-game inputs: disjoint nonempty a, b with |a|+|b| > omega_b.
std::size_t count_biclique_inputs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t wb = bf::max_biclique(g).size;
  std::size_t count = 0;
  for (std::uint64_t a = 1; a < (std::uint64_t{1} << n); ++a) {
    for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
      if (a & b) continue;
      if (g.bipartite()) {
        const std::uint64_t left = g.left_part().to_mask();
        if ((a & ~left) || (b & left)) continue;
      }
      if (bf::popcount(a) + bf::popcount(b) > wb) ++count;
    }
  }
  return count;
}

}  // namespace

TEST(Catalog, Sizes) {
  EXPECT_EQ(all_labeled_graphs(4).size(), 64u);
  EXPECT_EQ(all_labeled_graphs(1).size(), 1u);
  EXPECT_THROW(all_labeled_graphs(8), PreconditionError);
  auto c = graph_catalog(catalog::Cycle{5});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0], cycle_graph(5));
  EXPECT_EQ(c[0].edge_count(), 5u);
  // K_n is all stars once stripped
  EXPECT_TRUE(graph_catalog(catalog::Complete{4}).empty());
}

TEST(Catalog, ElementsAreStarFree) {
  for (const Graph& g : graph_catalog(catalog::AllGraphs{5})) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) ASSERT_LT(g.degree(v), g.vertex_count() - 1);
  }
}

TEST(Catalog, RandomStreamIsDeterministic) {
  catalog::Selector sel = catalog::Random{5, 8, 0.5, 30};
  auto a = graph_catalog(sel, 9), b = graph_catalog(sel, 9), c = graph_catalog(sel, 10);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  EXPECT_EQ(random_graph(9, 0.4, 3), random_graph(9, 0.4, 3));
  EXPECT_EQ(random_bipartite_graph(3, 4, 0.5, 1), random_bipartite_graph(3, 4, 0.5, 1));
  EXPECT_TRUE(random_bipartite_graph(3, 4, 0.5, 1).bipartite());
}

TEST(Inputs, P4Biclique) {
  Graph g = path_graph(4);
  auto ins = enumerate_valid_inputs(g, GameKind::biclique());
  EXPECT_TRUE(has_input(ins, VertexSet(4, {0, 1}), VertexSet(4, {2, 3})));
  EXPECT_FALSE(has_input(ins, VertexSet(4, {0}), VertexSet(4, {1})));
  for (const auto& in : ins) EXPECT_GE(in.a.size() + in.b.size(), 4u);
  EXPECT_EQ(ins.size(), 14u);
  EXPECT_EQ(ins.size(), count_biclique_inputs(g));
}

TEST(Inputs, BicliqueCountAgreesWithBruteForce) {
  for (const Graph& g : graph_catalog(catalog::Random{4, 7, 0.5, 25}, 4)) {
    ASSERT_EQ(enumerate_valid_inputs(g, GameKind::biclique()).size(), count_biclique_inputs(g));
  }
  for (const Graph& g : graph_catalog(catalog::RandomBipartite{3, 3, 0.5, 10}, 4)) {
    ASSERT_EQ(enumerate_valid_inputs(g, GameKind::biclique()).size(), count_biclique_inputs(g));
  }
}

TEST(Inputs, C5Clique) {
  Graph g = cycle_graph(5);
  auto ins = enumerate_valid_inputs(g, GameKind::clique());
  const GameInput* cross = find_input(ins, VertexSet(5, {0, 1}), VertexSet(5, {3}));
  ASSERT_NE(cross, nullptr);
  EXPECT_TRUE(cross->clique_pair);
  const GameInput* shortcut = find_input(ins, VertexSet(5, {0, 2}), VertexSet(5, {4}));
  ASSERT_NE(shortcut, nullptr);
  EXPECT_FALSE(shortcut->clique_pair);
  for (const auto& in : ins) {
    ASSERT_GT(in.a.size() + in.b.size(), 2u);
    ASSERT_EQ(in.clique_pair, bf::is_clique(g, in.a.to_mask()) && bf::is_clique(g, in.b.to_mask()));
  }
}

TEST(Inputs, EdgelessPair) {
  Graph g(2, {});
  auto ins = enumerate_valid_inputs(g, GameKind::biclique());
  ASSERT_EQ(ins.size(), 2u);
  EXPECT_TRUE(has_input(ins, VertexSet(2, {0}), VertexSet(2, {1})));
  EXPECT_TRUE(has_input(ins, VertexSet(2, {1}), VertexSet(2, {0})));
}

TEST(Inputs, EdgeGame) {
  Graph g = cycle_graph(6);
  GameKind kind = edge_game_for(g);
  EXPECT_EQ(kind.edge_bound, 2u);
  for (const auto& in : enumerate_valid_inputs(g, kind)) ASSERT_GT(in.a.size() * in.b.size(), 2u);
  EXPECT_THROW(enumerate_valid_inputs(g, GameKind::edge_biclique(1)), PromiseViolation);
  EXPECT_THROW(enumerate_valid_inputs(path_graph(13), GameKind::biclique()), OracleLimitError);
}

TEST(Suites, Names) {
  for (const Suite& s : all_suites()) EXPECT_EQ(suite_name(parse_suite(suite_name(s))), suite_name(s));
  EXPECT_EQ(all_suites().size(), 8u);
  EXPECT_EQ(suite_name(parse_suite("protocol-relaxed-clique")), "protocol-relaxed-clique");
  EXPECT_THROW(parse_suite("lemma4"), PreconditionError);
}

TEST(Suites, AllPassOnSmallGraphs) {
  std::vector<Graph> cat = graph_catalog(
      std::vector<catalog::Selector>{catalog::AllGraphs{3}, catalog::AllGraphs{4}, catalog::Cycle{5},
                                     catalog::CompleteBipartite{2, 3, true}, catalog::RandomBipartite{2, 3, 0.6, 5}});
  for (ThresholdEngine e : {ThresholdEngine::SortingNetwork, ThresholdEngine::Valiant}) {
    SuiteOptions opt;
    opt.thresholds.engine = e;
    for (const Suite& s : all_suites()) {
      SuiteReport r = run_suite(s, cat, opt);
      EXPECT_TRUE(r.passed()) << r.suite << " " << engine_name(e) << ": "
                              << (r.failures.empty() ? "" : r.failures[0].what);
      EXPECT_GT(r.graphs_tested, 0u) << r.suite;
      if (s.kind == SuiteKind::Protocol) {
        EXPECT_LE(r.max_bits_observed, r.bound) << r.suite;
        EXPECT_GT(r.inputs_tested, 0u);
      }
    }
  }
}

TEST(Suites, CliqueSuitesSkipBipartite) {
  std::vector<Graph> cat = graph_catalog(catalog::CompleteBipartite{2, 3, true});
  ASSERT_EQ(cat.size(), 1u);
  EXPECT_EQ(run_suite(parse_suite("lemma2"), cat).graphs_tested, 0u);
  EXPECT_EQ(run_suite(parse_suite("protocol-clique"), cat).graphs_tested, 0u);
  EXPECT_EQ(run_suite(parse_suite("lemma1"), cat).graphs_tested, 1u);
}

TEST(WorstCase, BoundedAndWitnessed) {
  ThresholdFactory thr;
  for (const Graph& g : graph_catalog(std::vector<catalog::Selector>{catalog::Cycle{5}, catalog::Path{5},
                                                                      catalog::Random{5, 6, 0.5, 8}})) {
    GameCircuits gc(g, thr);
    for (const GameKind& kind : {GameKind::biclique(), GameKind::clique(), GameKind::relaxed_clique(), edge_game_for(g)}) {
      WorstCase w = worst_case_bits(kind, gc);
      ASSERT_GT(w.inputs, 0u);
      ASSERT_LE(w.bits, bit_bound(kind, gc));
      ASSERT_EQ(play(kind, gc, w.witness.a, w.witness.b).transcript.total_bits(), w.bits);
    }
  }
}

TEST(WorstCase, P4GoldenAndJson) {
  ThresholdFactory thr;
  Graph g = path_graph(4);
  GameCircuits gc(g, thr);
  WorstCase w = worst_case_bits(GameKind::biclique(), gc);
  EXPECT_EQ(w.bits, 7u);
  EXPECT_EQ(w.inputs, 14u);
  Json j = worst_case_json(GameKind::biclique(), g, w, 7);
  EXPECT_EQ(j["max_bits"], 7);
  EXPECT_EQ(j["bound"], 7);
  EXPECT_EQ(j["inputs"], 14);
}

TEST(Report, JsonFields) {
  SuiteReport r = run_suite(parse_suite("protocol-biclique"), graph_catalog(catalog::Path{4}));
  Json j = report_json(r);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "builder", "seed", "passed", "graphs_tested", "inputs_tested",
                                            "failure_count", "max_bits_observed", "bound", "wall_time_seconds",
                                            "failures"}));
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["inputs_tested"], 14);
  EXPECT_EQ(j["max_bits_observed"], 7);
  EXPECT_TRUE(j["failures"].empty());
}
