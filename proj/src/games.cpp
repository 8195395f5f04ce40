#include "cliquegame/games.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/oracles.hpp"

namespace cliquegame {

std::string game_name(Game g) {
  switch (g) {
    case Game::Biclique: return "biclique";
    case Game::Clique: return "clique";
    case Game::RelaxedClique: return "relaxed-clique";
    case Game::EdgeBiclique: return "edge-biclique";
  }
  return "?";
}

Game parse_game(const std::string& name) {
  if (name == "biclique") return Game::Biclique;
  if (name == "clique") return Game::Clique;
  if (name == "relaxed-clique" || name == "relaxed") return Game::RelaxedClique;
  if (name == "edge-biclique") return Game::EdgeBiclique;
  throw PreconditionError("unknown game '" + name + "' (expected biclique|clique|relaxed-clique|edge-biclique)");
}

namespace {

void check_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count()) throw PreconditionError("vertex set does not belong to this graph");
}

}  // namespace

Assignment vector_p(const Graph& g, const NonedgeIndex& idx, const VertexSet& a) {
  check_universe(g, a);
  Assignment x(idx.size(), false);
  a.for_each([&](Vertex v) {
    for (std::size_t e : idx.incident(v)) x.set(e, true);
  });
  return x;
}

Assignment vector_q(const Graph& g, const NonedgeIndex& idx, const VertexSet& b) {
  check_universe(g, b);
  Assignment x(idx.size(), true);
  b.for_each([&](Vertex v) {
    for (std::size_t e : idx.incident(v)) x.set(e, false);
  });
  return x;
}

Assignment vector_q_relaxed(const Graph& g, const NonedgeIndex& idx, const VertexSet& b) {
  Assignment x = vector_q(g, idx, b);
  const VertexSet gamma = common_neighbors(g, b);
  for (std::size_t e = 0; e < idx.size(); ++e) {
    if (gamma.contains(idx[e].u) && gamma.contains(idx[e].v)) x.set(e, false);
  }
  return x;
}

NodeId monomial_into(CircuitBuilder& b, const NonedgeIndex& idx, Vertex v) {
  auto inc = idx.incident(v);
  if (inc.empty()) return b.constant(true);
  std::vector<NodeId> leaves;
  leaves.reserve(inc.size());
  for (std::size_t e : inc) leaves.push_back(b.var(e));
  return b.and_tree(leaves);
}

std::vector<Vertex> monomial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.in_left(v)) out.push_back(v);
  }
  return out;
}

Circuit build_f_k(const Graph& g, const NonedgeIndex& idx, std::size_t k, ThresholdFactory& thr) {
  if (!g.bipartite() && !is_star_free(g)) throw PreconditionError("f_k needs a star-free graph");
  const auto verts = monomial_vertices(g);
  if (k < 1 || k > verts.size()) {
    throw PreconditionError("f_k needs 1 <= k <= " + std::to_string(verts.size()) + ", got " + std::to_string(k));
  }
  CircuitBuilder b(idx.size());
  std::vector<NodeId> monomials;
  for (Vertex v : verts) monomials.push_back(monomial_into(b, idx, v));
  return b.finish(thr.instantiate(b, monomials, k));
}

namespace {

// OR over cliques of size >= k of Th_k over the given per-vertex nodes.
NodeId induced_clique_into(CircuitBuilder& b, const std::vector<VertexSet>& cliques, std::size_t k,
                           const std::vector<NodeId>& vertex_node, ThresholdFactory& thr) {
  std::vector<NodeId> branches;
  for (const auto& c : cliques) {
    if (c.size() < k) continue;
    std::vector<NodeId> inputs;
    c.for_each([&](Vertex v) { inputs.push_back(vertex_node[v]); });
    branches.push_back(thr.instantiate(b, inputs, k));
  }
  if (branches.empty()) return b.constant(false);
  return b.or_tree(branches);
}

}  // namespace

Circuit build_induced_clique_circuit(const Graph& g, std::size_t k, ThresholdFactory& thr) {
  return build_induced_clique_circuit(g, maximal_cliques(g), k, thr);
}

Circuit build_induced_clique_circuit(const Graph& g, const std::vector<VertexSet>& cliques, std::size_t k,
                                     ThresholdFactory& thr) {
  const std::size_t n = g.vertex_count();
  if (k < 1 || k > n) throw PreconditionError("induced clique circuit needs 1 <= k <= n");
  CircuitBuilder b(n);
  std::vector<NodeId> vertex_node(n);
  for (Vertex v = 0; v < n; ++v) vertex_node[v] = b.var(v);
  return b.finish(induced_clique_into(b, cliques, k, vertex_node, thr));
}

Circuit build_g_k(const Graph& g, const NonedgeIndex& idx, std::size_t k, ThresholdFactory& thr) {
  return build_g_k(g, idx, maximal_cliques(g), k, thr);
}

Circuit build_g_k(const Graph& g, const NonedgeIndex& idx, const std::vector<VertexSet>& cliques, std::size_t k,
                  ThresholdFactory& thr) {
  const std::size_t n = g.vertex_count();
  if (!is_star_free(g)) throw PreconditionError("g_k needs a star-free graph");
  if (k < 1 || k > n) throw PreconditionError("g_k needs 1 <= k <= n");
  CircuitBuilder b(idx.size());
  std::vector<NodeId> vertex_node(n);
  for (Vertex v = 0; v < n; ++v) vertex_node[v] = monomial_into(b, idx, v);
  return b.finish(induced_clique_into(b, cliques, k, vertex_node, thr));
}

GameCircuits::GameCircuits(Graph g, ThresholdFactory& thr) : graph_(std::move(g)), index_(graph_), thr_(&thr) {}

std::size_t GameCircuits::max_k(Game game) const {
  return game == Game::Clique ? graph_.vertex_count() : monomial_vertices(graph_).size();
}

const Circuit& GameCircuits::f(std::size_t k) {
  auto& slot = f_[k];
  if (!slot) slot = std::make_unique<Circuit>(build_f_k(graph_, index_, k, *thr_));
  return *slot;
}

const Circuit& GameCircuits::g(std::size_t k) {
  auto& slot = g_[k];
  if (!slot) slot = std::make_unique<Circuit>(build_g_k(graph_, index_, maximal_cliques(), k, *thr_));
  return *slot;
}

const Circuit& GameCircuits::for_game(Game game, std::size_t k) { return game == Game::Clique ? g(k) : f(k); }

const std::vector<VertexSet>& GameCircuits::maximal_cliques() {
  if (!cliques_) cliques_ = cliquegame::maximal_cliques(graph_);
  return *cliques_;
}

}  // namespace cliquegame
