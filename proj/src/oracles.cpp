#include "cliquegame/oracles.hpp"

#include "cliquegame/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace cliquegame {

namespace {

void check_limit(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit || g.vertex_count() > 62) {
    throw OracleLimitError(std::string("oracle limit exceeded for ") + what + ": n=" +
                           std::to_string(g.vertex_count()) + " > " + std::to_string(std::min<std::size_t>(limit, 62)));
  }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v).to_mask();
  return adj;
}

// Visits every side set a (restricted to allowed) together with its maximal
// partner Γ(a) ∩ partner_space, skipping a once Γ(a) is empty since it only
// shrinks as a grows.
void for_each_biclique_side(const Graph& g, const std::function<void(std::size_t, std::size_t)>& visit) {
  const auto adj = adjacency_masks(g);
  const std::size_t n = g.vertex_count();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t allowed = g.bipartite() ? g.left_part().to_mask() : all;
  const std::uint64_t partner_space = g.bipartite() ? g.right_part().to_mask() : all;

  std::function<void(Vertex, std::uint64_t, std::size_t)> rec = [&](Vertex next, std::uint64_t gamma,
                                                                    std::size_t a_size) {
    for (Vertex v = next; v < n; ++v) {
      if (!((allowed >> v) & 1U)) continue;
      std::uint64_t g2 = gamma & adj[v];
      if (!g2) continue;
      visit(a_size + 1, static_cast<std::size_t>(std::popcount(g2)));
      rec(v + 1, g2, a_size + 1);
    }
  };
  rec(0, partner_space, 0);
}

}  // namespace

std::size_t max_clique_size(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "max clique");
  std::size_t best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, c.size());
  return best;
}

std::size_t max_biclique_size(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "max biclique");
  // A lone vertex counts as a biclique of size 1, so that every clique
  // contains a biclique of its size even when the graph has no edge.
  std::size_t best = g.vertex_count() > 0 ? 1 : 0;
  for_each_biclique_side(g, [&](std::size_t a, std::size_t b) { best = std::max(best, a + b); });
  return best;
}

std::uint64_t max_edge_biclique(const Graph& g, std::size_t limit) {
  check_limit(g, limit, "max edge biclique");
  std::uint64_t best = 0;
  for_each_biclique_side(g, [&](std::size_t a, std::size_t b) {
    best = std::max<std::uint64_t>(best, static_cast<std::uint64_t>(a) * b);
  });
  return best;
}

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> out;
  const std::size_t n = g.vertex_count();
  if (n == 0) return out;

  std::function<void(VertexSet&, VertexSet, VertexSet)> expand = [&](VertexSet& r, VertexSet p, VertexSet x) {
    if (p.empty()) {
      if (x.empty()) {
        if (out.size() >= cap) {
          throw OracleLimitError("maximal clique count exceeds cap " + std::to_string(cap));
        }
        out.push_back(r);
      }
      return;
    }
    // Tomita pivot: the vertex of P ∪ X with the most neighbours in P.
    Vertex pivot = p.first();
    std::size_t best = 0;
    (p | x).for_each([&](Vertex u) {
      std::size_t c = (p & g.neighbors(u)).size();
      if (c > best || (c == best && u < pivot)) {
        best = c;
        pivot = u;
      }
    });
    VertexSet candidates = p - g.neighbors(pivot);
    candidates.for_each([&](Vertex v) {
      r.insert(v);
      expand(r, p & g.neighbors(v), x & g.neighbors(v));
      r.erase(v);
      p.erase(v);
      x.insert(v);
    });
  };

  VertexSet r(n);
  expand(r, g.all_vertices(), VertexSet(n));
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return lex_less(a, b); });
  return out;
}

}  // namespace cliquegame
