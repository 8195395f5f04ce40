#pragma once

#include "cliquegame/circuit.hpp"
#include "cliquegame/graph.hpp"
#include "cliquegame/threshold.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cliquegame {

enum class Game { Biclique, Clique, RelaxedClique, EdgeBiclique };

// A game variant; the edge-biclique game carries its edge bound K (no
// biclique of the graph has more than K edges).
struct GameKind {
  Game game = Game::Biclique;
  std::uint64_t edge_bound = 0;

  static GameKind biclique() { return {Game::Biclique, 0}; }
  static GameKind clique() { return {Game::Clique, 0}; }
  static GameKind relaxed_clique() { return {Game::RelaxedClique, 0}; }
  static GameKind edge_biclique(std::uint64_t k) { return {Game::EdgeBiclique, k}; }

  bool clique_family() const { return game == Game::Clique || game == Game::RelaxedClique; }
  friend bool operator==(const GameKind&, const GameKind&) = default;
};

// "biclique", "clique", "relaxed-clique", "edge-biclique".
std::string game_name(Game g);
Game parse_game(const std::string& name);

// p_a: 1 exactly on the nonedges incident with a.
Assignment vector_p(const Graph& g, const NonedgeIndex& idx, const VertexSet& a);
// q_b: complement of p_b.
Assignment vector_q(const Graph& g, const NonedgeIndex& idx, const VertexSet& b);
// q'_b: 0 on nonedges incident with b and on nonedges with both endpoints in Γ(b).
Assignment vector_q_relaxed(const Graph& g, const NonedgeIndex& idx, const VertexSet& b);

// M_v: AND of the variables of nonedges incident with v (constant 1 when
// there are none, which only a bipartite star can produce).
NodeId monomial_into(CircuitBuilder& b, const NonedgeIndex& idx, Vertex v);

// Vertices contributing a monomial to f_k: all of them, or V1 when bipartite.
std::vector<Vertex> monomial_vertices(const Graph& g);

// f_k = Th_k over the monomials M_v. Requires a star-free graph (unless
// bipartite) and 1 <= k <= |monomial_vertices(g)|.
Circuit build_f_k(const Graph& g, const NonedgeIndex& idx, std::size_t k, ThresholdFactory& thr);

// Induced k-clique function over one variable per vertex: OR over maximal
// cliques C with |C| >= k of Th_k applied to the variables of C. The constant
// 0 circuit when no maximal clique reaches size k.
Circuit build_induced_clique_circuit(const Graph& g, std::size_t k, ThresholdFactory& thr);
Circuit build_induced_clique_circuit(const Graph& g, const std::vector<VertexSet>& cliques, std::size_t k,
                                     ThresholdFactory& thr);

// g_k: the induced clique circuit with vertex v's variable replaced by M_v.
Circuit build_g_k(const Graph& g, const NonedgeIndex& idx, std::size_t k, ThresholdFactory& thr);
Circuit build_g_k(const Graph& g, const NonedgeIndex& idx, const std::vector<VertexSet>& cliques, std::size_t k,
                  ThresholdFactory& thr);

// Separating circuits of one graph, built on demand and cached. Both parties
// of a session share one instance: the contents are a deterministic function
// of (graph, threshold options), so sharing is the same as rebuilding.
// Not thread-safe.
class GameCircuits {
 public:
  GameCircuits(Graph g, ThresholdFactory& thr);

  const Graph& graph() const noexcept { return graph_; }
  const NonedgeIndex& index() const noexcept { return index_; }
  ThresholdFactory& thresholds() const noexcept { return *thr_; }

  // Largest k with a circuit for this game: |monomial_vertices| for f_k, n for g_k.
  std::size_t max_k(Game game) const;

  const Circuit& f(std::size_t k);
  const Circuit& g(std::size_t k);
  // f_k for the biclique, relaxed, and edge games; g_k for the clique game.
  const Circuit& for_game(Game game, std::size_t k);
  const std::vector<VertexSet>& maximal_cliques();

 private:
  Graph graph_;
  NonedgeIndex index_;
  ThresholdFactory* thr_;
  std::optional<std::vector<VertexSet>> cliques_;
  std::map<std::size_t, std::unique_ptr<Circuit>> f_;
  std::map<std::size_t, std::unique_ptr<Circuit>> g_;
};

}  // namespace cliquegame
