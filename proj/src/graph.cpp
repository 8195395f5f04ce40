#include "cliquegame/graph.hpp"

#include "cliquegame/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace cliquegame {

Graph::Graph(std::size_t n, const std::vector<VertexPair>& edges,
             std::optional<std::size_t> left_part_size, std::vector<std::uint32_t> labels)
    : adjacency_(n, VertexSet(n)), left_part_size_(left_part_size), labels_(std::move(labels)) {
  if (left_part_size_ && *left_part_size_ > n) {
    throw PreconditionError("bipartition part larger than vertex count");
  }
  if (labels_.empty()) {
    labels_.resize(n);
    for (std::size_t v = 0; v < n; ++v) labels_[v] = static_cast<std::uint32_t>(v + 1);
  } else if (labels_.size() != n) {
    throw PreconditionError("label map size differs from vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
    if (u == v) throw PreconditionError("self-loop on vertex " + std::to_string(u));
    if (left_part_size_ && in_left(u) == in_left(v)) {
      throw PreconditionError("edge inside a declared part");
    }
    if (!adjacency_[u].contains(v)) {
      adjacency_[u].insert(v);
      adjacency_[v].insert(u);
      ++edge_count_;
    }
  }
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    adjacency_[u].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

VertexSet Graph::left_part() const {
  VertexSet s(vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (in_left(v)) s.insert(v);
  }
  return s;
}

VertexSet Graph::right_part() const { return all_vertices() - left_part(); }

std::optional<Vertex> Graph::vertex_of_label(std::uint32_t label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

bool Graph::is_clique(const VertexSet& s) const {
  bool ok = true;
  s.for_each([&](Vertex u) {
    if (!ok) return;
    VertexSet others = s;
    others.erase(u);
    if (!others.is_subset_of(adjacency_[u])) ok = false;
  });
  return ok;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::int64_t> new_id(vertex_count(), -1);
  std::vector<std::uint32_t> labels;
  std::size_t left = 0;
  keep.for_each([&](Vertex v) {
    new_id[v] = static_cast<std::int64_t>(labels.size());
    labels.push_back(labels_[v]);
    if (left_part_size_ && in_left(v)) ++left;
  });
  std::vector<VertexPair> edges;
  for (const auto& e : this->edges()) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
      edges.push_back({static_cast<Vertex>(new_id[e.u]), static_cast<Vertex>(new_id[e.v])});
    }
  }
  std::optional<std::size_t> part;
  if (left_part_size_) part = left;
  const std::size_t n = labels.size();
  return Graph(n, edges, part, std::move(labels));
}

bool operator==(const Graph& a, const Graph& b) {
  return a.adjacency_ == b.adjacency_ && a.left_part_size_ == b.left_part_size_ && a.labels_ == b.labels_;
}

namespace {

// Parses a positive decimal integer token; rejects signs and trailing junk.
bool parse_count(const std::string& tok, std::uint64_t& out) {
  if (tok.empty() || tok.size() > 18) return false;
  out = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint64_t> n;
  std::optional<std::size_t> part;
  std::vector<VertexPair> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank
    if (tag == "c") continue;

    std::vector<std::string> fields;
    for (std::string f; ls >> f;) fields.push_back(f);

    if (tag == "p") {
      std::uint64_t nv = 0, ne = 0;
      if (n) throw ParseError(line_no, "duplicate header");
      if (fields.size() != 3 || fields[0] != "edge" || !parse_count(fields[1], nv) || !parse_count(fields[2], ne)) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      if (nv > (1U << 20)) throw ParseError(line_no, "vertex count too large");
      n = nv;
    } else if (tag == "e") {
      if (!n) throw ParseError(line_no, "edge before header");
      std::uint64_t u = 0, v = 0;
      if (fields.size() != 2 || !parse_count(fields[0], u) || !parse_count(fields[1], v)) {
        throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      }
      if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError(line_no, "vertex out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      auto a = static_cast<Vertex>(u - 1), b = static_cast<Vertex>(v - 1);
      if (part && ((a < *part) == (b < *part))) throw ParseError(line_no, "edge within a declared part");
      edges.push_back(VertexPair::of(a, b));
    } else if (tag == "b") {
      if (!n) throw ParseError(line_no, "bipartition before header");
      if (part) throw ParseError(line_no, "duplicate bipartition");
      std::uint64_t k = 0;
      if (fields.size() != 1 || !parse_count(fields[0], k) || k > *n) {
        throw ParseError(line_no, "malformed bipartition line, expected 'b <k>' with k <= n");
      }
      part = static_cast<std::size_t>(k);
      for (const auto& e : edges) {
        if ((e.u < *part) == (e.v < *part)) throw ParseError(line_no, "earlier edge lies within a declared part");
      }
    } else {
      throw ParseError(line_no, "unknown line type '" + tag + "'");
    }
  }
  if (!n) throw ParseError(0, "missing 'p edge' header");
  return Graph(static_cast<std::size_t>(*n), edges, part);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError(0, "cannot open graph file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream os;
  auto edges = g.edges();
  os << "p edge " << g.vertex_count() << ' ' << edges.size() << '\n';
  if (g.bipartite()) os << "b " << *g.left_part_size() << '\n';
  for (const auto& e : edges) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

StripResult strip_stars(const Graph& g) {
  VertexSet alive = g.all_vertices();
  VertexSet removed = g.empty_set();
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!alive.contains(v)) continue;
      VertexSet others = alive;
      others.erase(v);
      if (others.is_subset_of(g.neighbors(v))) {
        alive.erase(v);
        removed.insert(v);
        changed = true;
      }
    }
  }
  if (alive.size() < 2) throw PreconditionError("graph trivial after star stripping");
  return {g.induced(alive), removed};
}

bool is_star_free(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) + 1 == g.vertex_count()) return false;
  }
  return true;
}

NonedgeIndex::NonedgeIndex(const Graph& g)
    : n_(g.vertex_count()), lookup_(g.vertex_count() * g.vertex_count(), -1), incident_(g.vertex_count()) {
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!g.admissible_pair(u, v) || g.adjacent(u, v)) continue;
      auto id = static_cast<std::int64_t>(pairs_.size());
      lookup_[u * n_ + v] = lookup_[v * n_ + u] = id;
      pairs_.push_back({u, v});
    }
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    incident_[pairs_[i].u].push_back(i);
    incident_[pairs_[i].v].push_back(i);
  }
  for (auto& list : incident_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> NonedgeIndex::index_of(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return std::nullopt;
  auto id = lookup_[u * n_ + v];
  if (id < 0) return std::nullopt;
  return static_cast<std::size_t>(id);
}

NonedgeIndex nonedges(const Graph& g) { return NonedgeIndex(g); }

std::vector<std::size_t> incident_nonedges(const NonedgeIndex& idx, const VertexSet& s) {
  std::vector<std::size_t> out;
  s.for_each([&](Vertex v) {
    auto inc = idx.incident(v);
    out.insert(out.end(), inc.begin(), inc.end());
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet common_neighbors(const Graph& g, const VertexSet& b) {
  VertexSet gamma = g.all_vertices();
  b.for_each([&](Vertex u) { gamma &= g.neighbors(u); });
  return gamma - b;
}

std::optional<VertexPair> find_nonedge_within(const Graph& g, const VertexSet& s) {
  for (Vertex u = s.first(); u < s.universe(); u = s.next(u)) {
    for (Vertex v = s.next(u); v < s.universe(); v = s.next(v)) {
      if (g.admissible_pair(u, v) && !g.adjacent(u, v)) return VertexPair{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace cliquegame
