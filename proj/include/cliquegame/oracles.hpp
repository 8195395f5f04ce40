#pragma once

#include "cliquegame/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cliquegame {

// Exact combinatorial oracles. None of them approximates: any instance past
// the stated vertex limit raises OracleLimitError.

inline constexpr std::size_t kCliqueOracleLimit = 20;
inline constexpr std::size_t kBicliqueOracleLimit = 16;
inline constexpr std::size_t kMaximalCliqueCap = 1U << 20;

// ω(G).
std::size_t max_clique_size(const Graph& g, std::size_t limit = kCliqueOracleLimit);

// ω_b(G) = max |a| + |b| over bicliques with both sides nonempty, or 1 when
// the graph has vertices but no edge. In bipartite mode a ⊆ V1 and b ⊆ V2.
std::size_t max_biclique_size(const Graph& g, std::size_t limit = kBicliqueOracleLimit);

// max |a|·|b| over bicliques with both sides nonempty; 0 without edges.
std::uint64_t max_edge_biclique(const Graph& g, std::size_t limit = kBicliqueOracleLimit);

// All inclusion-maximal cliques via pivoted Bron–Kerbosch, sorted
// lexicographically by member list. Throws OracleLimitError when more than
// cap cliques exist.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t cap = kMaximalCliqueCap);

}  // namespace cliquegame
