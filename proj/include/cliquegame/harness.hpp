#pragma once

#include "cliquegame/protocol.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace cliquegame {

// ---- graph catalog ---------------------------------------------------------

std::vector<Graph> all_labeled_graphs(std::size_t n);  // 2^C(n,2) graphs, unfiltered
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite_graph(std::size_t p, std::size_t q, bool declare_parts);
Graph random_graph(std::size_t n, double p, std::uint64_t seed);
Graph random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed);

namespace catalog {
struct AllGraphs { std::size_t n; };  // every labeled graph on exactly n vertices
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };
struct CompleteBipartite { std::size_t p, q; bool declare_parts = false; };
// count graphs with n drawn uniformly from [n_min, n_max], each edge with probability p.
struct Random { std::size_t n_min, n_max; double p; std::size_t count; };
struct RandomBipartite { std::size_t left, right; double p; std::size_t count; };
using Selector = std::variant<AllGraphs, Path, Cycle, Complete, CompleteBipartite, Random, RandomBipartite>;
}  // namespace catalog

// Deterministic stream for (selector, seed): star-stripped, trivial results dropped.
std::vector<Graph> graph_catalog(const catalog::Selector& selector, std::uint64_t seed = 0);
std::vector<Graph> graph_catalog(const std::vector<catalog::Selector>& selectors, std::uint64_t seed = 0);

// ---- valid inputs ----------------------------------------------------------

struct GameInput {
  VertexSet a;
  VertexSet b;
  bool clique_pair = false;  // both a and b cliques (the non-shortcut case of the clique games)
};

// Every (a, b) satisfying the game's contract and promise, in a fixed order.
// Needs the exact oracles, so n is bounded by oracle_limit.
std::vector<GameInput> enumerate_valid_inputs(const Graph& g, const GameKind& kind,
                                              std::size_t oracle_limit = kBicliqueOracleLimit);

// The edge-biclique game instance with K set to the graph's max edge biclique.
GameKind edge_game_for(const Graph& g, std::size_t oracle_limit = kBicliqueOracleLimit);

// ---- suites ----------------------------------------------------------------

enum class SuiteKind { Lemma1, Lemma2, Lemma3, Lemma6, Protocol };

struct Suite {
  SuiteKind kind = SuiteKind::Lemma1;
  Game game = Game::Biclique;  // protocol suites only
};

std::string suite_name(const Suite& s);
Suite parse_suite(const std::string& name);
std::vector<Suite> all_suites();

struct Failure {
  Graph graph;
  std::size_t k = 0;  // 0 when not tied to one k
  VertexSet a;
  VertexSet b;
  std::string what;
};

struct SuiteReport {
  std::string suite;
  std::string builder;
  std::uint64_t seed = 0;
  std::size_t graphs_tested = 0;
  std::size_t inputs_tested = 0;
  std::vector<Failure> failures;  // at most kMaxRecordedFailures kept
  std::size_t failure_count = 0;
  std::size_t max_bits_observed = 0;
  std::size_t bound = 0;  // largest per-graph bit bound seen (protocol suites)
  double wall_time_seconds = 0.0;

  bool passed() const noexcept { return failure_count == 0; }
};

inline constexpr std::size_t kMaxRecordedFailures = 100;

struct SuiteOptions {
  ThresholdOptions thresholds;
  std::size_t oracle_limit = kBicliqueOracleLimit;
};

SuiteReport run_suite(const Suite& suite, const std::vector<Graph>& catalog, const SuiteOptions& options = {});

struct WorstCase {
  std::size_t bits = 0;
  GameInput witness;
  std::size_t inputs = 0;
};

// Exact maximum transcript length over every valid input.
WorstCase worst_case_bits(const GameKind& kind, GameCircuits& circuits, std::size_t oracle_limit = kBicliqueOracleLimit);

}  // namespace cliquegame
