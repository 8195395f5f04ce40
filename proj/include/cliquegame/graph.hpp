#pragma once

#include "cliquegame/vertex_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cliquegame {

// Unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
  Vertex u = 0;
  Vertex v = 0;

  static VertexPair of(Vertex a, Vertex b) { return a < b ? VertexPair{a, b} : VertexPair{b, a}; }
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Simple undirected graph on dense ids 0..n-1 with an optional bipartition
// whose left part is the id prefix 0..left_part_size-1. Immutable once built.
class Graph {
 public:
  // Labels default to 1..n. Throws PreconditionError on self-loops,
  // out-of-range endpoints, or edges inside a declared part.
  Graph(std::size_t n, const std::vector<VertexPair>& edges,
        std::optional<std::size_t> left_part_size = std::nullopt,
        std::vector<std::uint32_t> labels = {});

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  // Sorted edge list.
  std::vector<VertexPair> edges() const;

  bool bipartite() const noexcept { return left_part_size_.has_value(); }
  std::optional<std::size_t> left_part_size() const noexcept { return left_part_size_; }
  // Without a bipartition every vertex is on the left.
  bool in_left(Vertex v) const { return !left_part_size_ || v < *left_part_size_; }
  // Pairs the games may treat as nonedges: all pairs, or cross pairs when bipartite.
  bool admissible_pair(Vertex u, Vertex v) const { return u != v && (!bipartite() || in_left(u) != in_left(v)); }
  VertexSet left_part() const;
  VertexSet right_part() const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  std::uint32_t label(Vertex v) const { return labels_[v]; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  std::optional<Vertex> vertex_of_label(std::uint32_t label) const;

  bool is_clique(const VertexSet& s) const;

  // Subgraph induced by keep, ids re-densified in increasing order. The
  // left part stays a prefix because order is preserved.
  Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
  std::optional<std::size_t> left_part_size_;
  std::vector<std::uint32_t> labels_;
};

// Parse the DIMACS-flavored graph format: `c` comments, `p edge <n> <m>`,
// `e <u> <v>` with 1-based ids, and optional `b <k>` declaring V1 = 1..k.
// Duplicate edges collapse. Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

struct StripResult {
  Graph graph;
  VertexSet removed;  // over the input graph's ids
};

// Repeatedly removes vertices adjacent to every other remaining vertex.
// Throws PreconditionError when fewer than two vertices survive.
StripResult strip_stars(const Graph& g);

bool is_star_free(const Graph& g);

// The nonedges of a graph in lexicographic order, doubling as the variable
// index space of the separating circuits. In bipartite mode only cross-part
// pairs are listed.
class NonedgeIndex {
 public:
  explicit NonedgeIndex(const Graph& g);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const VertexPair& operator[](std::size_t i) const { return pairs_[i]; }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }

  std::optional<std::size_t> index_of(Vertex u, Vertex v) const;

  // E(v): indices of nonedges containing v, ascending.
  std::span<const std::size_t> incident(Vertex v) const { return incident_[v]; }

 private:
  std::size_t n_ = 0;
  std::vector<VertexPair> pairs_;
  std::vector<std::int64_t> lookup_;  // n*n, -1 for edges and inadmissible pairs
  std::vector<std::vector<std::size_t>> incident_;
};

NonedgeIndex nonedges(const Graph& g);

// E(s): indices of nonedges with at least one endpoint in s, ascending.
std::vector<std::size_t> incident_nonedges(const NonedgeIndex& idx, const VertexSet& s);

// Γ(b): vertices outside b adjacent to every vertex of b.
VertexSet common_neighbors(const Graph& g, const VertexSet& b);

// Lexicographically smallest nonedge with both endpoints in s, if any.
std::optional<VertexPair> find_nonedge_within(const Graph& g, const VertexSet& s);

}  // namespace cliquegame
