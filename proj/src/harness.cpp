#include "cliquegame/harness.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/oracles.hpp"
#include "cliquegame/rng.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>

namespace cliquegame {

// ---- catalog ---------------------------------------------------------------

std::vector<Graph> all_labeled_graphs(std::size_t n) {
  if (n > 7) throw PreconditionError("labeled enumeration is limited to n <= 7");
  std::vector<VertexPair> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<VertexPair> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    }
    out.emplace_back(n, edges);
  }
  return out;
}

Graph path_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(VertexPair::of(v, static_cast<Vertex>((v + 1) % n)));
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q, bool declare_parts) {
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < p; ++u) {
    for (Vertex v = 0; v < q; ++v) edges.push_back({u, static_cast<Vertex>(p + v)});
  }
  std::optional<std::size_t> part;
  if (declare_parts) part = p;
  return Graph(p + q, edges, part);
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  auto rng = make_rng(seed, {n});
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph random_bipartite_graph(std::size_t left, std::size_t right, double p, std::uint64_t seed) {
  auto rng = make_rng(seed, {left, right});
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < left; ++u) {
    for (Vertex v = 0; v < right; ++v) {
      if (bernoulli(rng, p)) edges.push_back({u, static_cast<Vertex>(left + v)});
    }
  }
  return Graph(left + right, edges, left);
}

namespace {

void push_stripped(std::vector<Graph>& out, const Graph& g) {
  try {
    out.push_back(strip_stars(g).graph);
  } catch (const PreconditionError&) {
    // trivial after stripping
  }
}

}  // namespace

std::vector<Graph> graph_catalog(const catalog::Selector& selector, std::uint64_t seed) {
  std::vector<Graph> out;
  std::visit(
      [&](const auto& sel) {
        using T = std::decay_t<decltype(sel)>;
        if constexpr (std::is_same_v<T, catalog::AllGraphs>) {
          for (const auto& g : all_labeled_graphs(sel.n)) push_stripped(out, g);
        } else if constexpr (std::is_same_v<T, catalog::Path>) {
          push_stripped(out, path_graph(sel.n));
        } else if constexpr (std::is_same_v<T, catalog::Cycle>) {
          push_stripped(out, cycle_graph(sel.n));
        } else if constexpr (std::is_same_v<T, catalog::Complete>) {
          push_stripped(out, complete_graph(sel.n));
        } else if constexpr (std::is_same_v<T, catalog::CompleteBipartite>) {
          push_stripped(out, complete_bipartite_graph(sel.p, sel.q, sel.declare_parts));
        } else if constexpr (std::is_same_v<T, catalog::Random>) {
          auto rng = make_rng(seed, {0x4e47u, sel.n_min, sel.n_max});
          for (std::size_t i = 0; i < sel.count; ++i) {
            std::size_t n = sel.n_min + uniform_index(rng, sel.n_max - sel.n_min + 1);
            push_stripped(out, random_graph(n, sel.p, rng()));
          }
        } else if constexpr (std::is_same_v<T, catalog::RandomBipartite>) {
          auto rng = make_rng(seed, {0x4247u, sel.left, sel.right});
          for (std::size_t i = 0; i < sel.count; ++i) {
            push_stripped(out, random_bipartite_graph(sel.left, sel.right, sel.p, rng()));
          }
        }
      },
      selector);
  return out;
}

std::vector<Graph> graph_catalog(const std::vector<catalog::Selector>& selectors, std::uint64_t seed) {
  std::vector<Graph> out;
  for (const auto& s : selectors) {
    auto part = graph_catalog(s, seed);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

// ---- valid inputs ----------------------------------------------------------

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(v).to_mask();
  return adj;
}

bool mask_is_clique(const std::vector<std::uint64_t>& adj, std::uint64_t s) {
  for (std::uint64_t rest = s; rest; rest &= rest - 1) {
    auto v = static_cast<std::size_t>(std::countr_zero(rest));
    if ((s & ~(std::uint64_t{1} << v) & ~adj[v]) != 0) return false;
  }
  return true;
}

std::vector<char> clique_table(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::vector<char> t(std::size_t{1} << g.vertex_count());
  for (std::uint64_t s = 0; s < t.size(); ++s) t[s] = mask_is_clique(adj, s) ? 1 : 0;
  return t;
}

constexpr std::size_t kEnumerationLimit = 12;

}  // namespace

GameKind edge_game_for(const Graph& g, std::size_t oracle_limit) {
  return GameKind::edge_biclique(max_edge_biclique(g, oracle_limit));
}

std::vector<GameInput> enumerate_valid_inputs(const Graph& g, const GameKind& kind, std::size_t oracle_limit) {
  const std::size_t n = g.vertex_count();
  if (n > std::min(oracle_limit, kEnumerationLimit)) {
    throw OracleLimitError("input enumeration limited to n <= " + std::to_string(std::min(oracle_limit, kEnumerationLimit)));
  }
  if (g.bipartite() && kind.clique_family()) {
    throw PreconditionError("clique games are not defined on bipartite-declared graphs");
  }
  std::size_t omega = 0, omega_b = 0;
  switch (kind.game) {
    case Game::Biclique: omega_b = max_biclique_size(g, oracle_limit); break;
    case Game::EdgeBiclique:
      if (max_edge_biclique(g, oracle_limit) > kind.edge_bound) {
        throw PromiseViolation("K is below the largest biclique edge count");
      }
      break;
    case Game::Clique:
    case Game::RelaxedClique: omega = max_clique_size(g, oracle_limit); break;
  }
  const std::vector<char> cliques = kind.clique_family() ? clique_table(g) : std::vector<char>{};
  const std::uint64_t left = g.left_part().to_mask();

  std::vector<GameInput> out;
  std::vector<int> digit(n, 0);  // 0 outside, 1 in a, 2 in b
  for (;;) {
    std::uint64_t am = 0, bm = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (digit[v] == 1) am |= std::uint64_t{1} << v;
      if (digit[v] == 2) bm |= std::uint64_t{1} << v;
    }
    const auto sa = static_cast<std::size_t>(std::popcount(am));
    const auto sb = static_cast<std::size_t>(std::popcount(bm));
    bool ok = false;
    bool clique_pair = false;
    switch (kind.game) {
      case Game::Biclique:
        ok = sa > 0 && sb > 0 && sa + sb > omega_b && (!g.bipartite() || ((am & ~left) == 0 && (bm & left) == 0));
        break;
      case Game::EdgeBiclique:
        ok = static_cast<std::uint64_t>(sa) * sb > kind.edge_bound &&
             (!g.bipartite() || ((am & ~left) == 0 && (bm & left) == 0));
        break;
      case Game::Clique:
      case Game::RelaxedClique:
        ok = sa + sb > omega;
        clique_pair = ok && cliques[am] && cliques[bm];
        break;
    }
    if (ok) {
      out.push_back({VertexSet::from_mask(n, am), VertexSet::from_mask(n, bm), clique_pair});
    }
    std::size_t v = 0;
    while (v < n && digit[v] == 2) digit[v++] = 0;
    if (v == n) break;
    ++digit[v];
  }
  return out;
}

// ---- suites ----------------------------------------------------------------

std::string suite_name(const Suite& s) {
  switch (s.kind) {
    case SuiteKind::Lemma1: return "lemma1";
    case SuiteKind::Lemma2: return "lemma2";
    case SuiteKind::Lemma3: return "lemma3";
    case SuiteKind::Lemma6: return "lemma6";
    case SuiteKind::Protocol: return "protocol-" + game_name(s.game);
  }
  return "?";
}

Suite parse_suite(const std::string& name) {
  if (name == "lemma1") return {SuiteKind::Lemma1};
  if (name == "lemma2") return {SuiteKind::Lemma2};
  if (name == "lemma3") return {SuiteKind::Lemma3};
  if (name == "lemma6") return {SuiteKind::Lemma6};
  const std::string prefix = "protocol-";
  if (name.rfind(prefix, 0) == 0) return {SuiteKind::Protocol, parse_game(name.substr(prefix.size()))};
  throw PreconditionError("unknown suite '" + name +
                          "' (expected lemma1|lemma2|lemma3|lemma6|protocol-<game>)");
}

std::vector<Suite> all_suites() {
  return {{SuiteKind::Lemma1},
          {SuiteKind::Lemma2},
          {SuiteKind::Lemma3},
          {SuiteKind::Lemma6},
          {SuiteKind::Protocol, Game::Biclique},
          {SuiteKind::Protocol, Game::Clique},
          {SuiteKind::Protocol, Game::RelaxedClique},
          {SuiteKind::Protocol, Game::EdgeBiclique}};
}

namespace {

std::size_t ceil_log2(std::size_t x) { return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1)); }

std::size_t max_incidence(const Graph& g, const NonedgeIndex& idx) {
  std::size_t m = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) m = std::max(m, idx.incident(v).size());
  return m;
}

class Recorder {
 public:
  explicit Recorder(SuiteReport& r) : report_(r) {}

  void fail(const Graph& g, std::size_t k, const VertexSet& a, const VertexSet& b, std::string what) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecordedFailures) report_.failures.push_back({g, k, a, b, std::move(what)});
  }

  // Evaluates c on each assignment and records a failure wherever the output
  // differs from `expected`. `sets` carries the (a, b) behind each assignment.
  void expect_all(const Graph& g, std::size_t k, const Circuit& c, const std::vector<Assignment>& xs,
                  const std::vector<std::pair<VertexSet, VertexSet>>& sets, bool expected, const std::string& what) {
    auto vals = eval_many(c, xs);
    count(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (vals[i] != expected) fail(g, k, sets[i].first, sets[i].second, what);
    }
  }

  void count(std::size_t inputs) { report_.inputs_tested += inputs; }

 private:
  SuiteReport& report_;
};

// Vertex subsets of `space` as masks, in increasing mask order.
std::vector<std::uint64_t> subsets_of(std::uint64_t space) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = space;; s = (s - 1) & space) {
    out.push_back(s);
    if (s == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void lemma1_graph(const Graph& g, ThresholdFactory& thr, std::size_t oracle_limit, Recorder& rec) {
  GameCircuits circuits(g, thr);
  const NonedgeIndex& idx = circuits.index();
  const std::size_t n = g.vertex_count();
  const std::size_t wb = max_biclique_size(g, oracle_limit);
  const std::uint64_t edge_k = max_edge_biclique(g, oracle_limit);
  const std::uint64_t a_space = g.left_part().to_mask();
  const std::uint64_t b_space = g.bipartite() ? g.right_part().to_mask() : g.all_vertices().to_mask();
  const std::size_t monomials = monomial_vertices(g).size();
  const std::size_t stretch = ceil_log2(max_incidence(g, idx));
  const VertexSet none(n);

  for (std::size_t k = 1; k <= monomials; ++k) {
    const Circuit& f = circuits.f(k);
    if (f.depth() > thr.get(monomials, k).depth() + stretch + 1) {
      rec.fail(g, k, none, none, "f_k depth " + std::to_string(f.depth()) + " above threshold depth + log bound");
    }
    std::vector<Assignment> accept, reject, reject_edge;
    std::vector<std::pair<VertexSet, VertexSet>> accept_sets, reject_sets, reject_edge_sets;
    for (std::uint64_t am : subsets_of(a_space)) {
      if (static_cast<std::size_t>(std::popcount(am)) != k) continue;
      VertexSet a = VertexSet::from_mask(n, am);
      accept.push_back(vector_p(g, idx, a));
      accept_sets.emplace_back(a, none);
    }
    for (std::uint64_t bm : subsets_of(b_space)) {
      const auto sb = static_cast<std::size_t>(std::popcount(bm));
      if (sb == 0) continue;
      VertexSet b = VertexSet::from_mask(n, bm);
      if (sb + k > wb) {
        reject.push_back(vector_q(g, idx, b));
        reject_sets.emplace_back(none, b);
      }
      if (static_cast<std::uint64_t>(sb) * k > edge_k) {
        reject_edge.push_back(vector_q(g, idx, b));
        reject_edge_sets.emplace_back(none, b);
      }
    }
    rec.expect_all(g, k, f, accept, accept_sets, true, "f_k(p_a) != 1 for |a| = k");
    rec.expect_all(g, k, f, reject, reject_sets, false, "f_k(q_b) != 0 for |b| > omega_b - k");
    rec.expect_all(g, k, f, reject_edge, reject_edge_sets, false, "f_k(q_b) != 0 for k|b| > K");
  }
}

void lemma2_graph(const Graph& g, ThresholdFactory& thr, std::size_t oracle_limit, Recorder& rec) {
  GameCircuits circuits(g, thr);
  const NonedgeIndex& idx = circuits.index();
  const std::size_t n = g.vertex_count();
  const std::size_t omega = max_clique_size(g, oracle_limit);
  const auto is_clique = clique_table(g);
  const std::size_t stretch = ceil_log2(max_incidence(g, idx));
  const VertexSet none(n);

  for (std::size_t k = 1; k <= n; ++k) {
    const Circuit& gk = circuits.g(k);
    const Circuit induced = build_induced_clique_circuit(g, circuits.maximal_cliques(), k, thr);
    if (gk.depth() > induced.depth() + stretch) {
      rec.fail(g, k, none, none, "g_k depth " + std::to_string(gk.depth()) + " above induced-clique depth + log bound");
    }
    std::vector<Assignment> accept, reject;
    std::vector<std::pair<VertexSet, VertexSet>> accept_sets, reject_sets;
    for (std::uint64_t s = 0; s < is_clique.size(); ++s) {
      if (!is_clique[s]) continue;
      const auto sz = static_cast<std::size_t>(std::popcount(s));
      VertexSet c = VertexSet::from_mask(n, s);
      if (sz == k) {
        accept.push_back(vector_p(g, idx, c));
        accept_sets.emplace_back(c, none);
      }
      if (sz + k > omega) {
        reject.push_back(vector_q(g, idx, c));
        reject_sets.emplace_back(none, c);
      }
    }
    rec.expect_all(g, k, gk, accept, accept_sets, true, "g_k(p_a) != 1 for a k-clique a");
    rec.expect_all(g, k, gk, reject, reject_sets, false, "g_k(q_b) != 0 for a clique b with |b| > omega - k");
  }
}

void lemma3_graph(const Graph& g, ThresholdFactory& thr, std::size_t oracle_limit, Recorder& rec) {
  GameCircuits circuits(g, thr);
  const NonedgeIndex& idx = circuits.index();
  const std::size_t n = g.vertex_count();
  const std::size_t omega = max_clique_size(g, oracle_limit);
  const auto is_clique = clique_table(g);
  const VertexSet none(n);

  // q'_b <= q_b pointwise, with equality exactly when Γ(b) spans no nonedge.
  for (std::uint64_t s = 1; s < is_clique.size(); ++s) {
    VertexSet b = VertexSet::from_mask(n, s);
    Assignment q = vector_q(g, idx, b), qr = vector_q_relaxed(g, idx, b);
    bool below = true;
    for (std::size_t e = 0; e < q.size(); ++e) below = below && (!qr[e] || q[e]);
    if (!below) rec.fail(g, 0, none, b, "q'_b not pointwise below q_b");
    const bool spans = find_nonedge_within(g, common_neighbors(g, b)).has_value();
    if ((q == qr) == spans) rec.fail(g, 0, none, b, "q'_b = q_b disagrees with Γ(b) spanning no nonedge");
  }

  for (std::size_t k = 1; k <= n; ++k) {
    const Circuit& f = circuits.f(k);
    std::vector<Assignment> accept, reject;
    std::vector<std::pair<VertexSet, VertexSet>> accept_sets, reject_sets;
    for (std::uint64_t s = 1; s < is_clique.size(); ++s) {
      if (!is_clique[s]) continue;
      const auto sz = static_cast<std::size_t>(std::popcount(s));
      VertexSet c = VertexSet::from_mask(n, s);
      if (sz == k) {
        accept.push_back(vector_p(g, idx, c));
        accept_sets.emplace_back(c, none);
      }
      if (sz + k > omega) {
        reject.push_back(vector_q_relaxed(g, idx, c));
        reject_sets.emplace_back(none, c);
      }
    }
    rec.expect_all(g, k, f, accept, accept_sets, true, "f_k(p_a) != 1 for a k-clique a");
    rec.expect_all(g, k, f, reject, reject_sets, false, "f_k(q'_b) != 0 for a clique b with |b| > omega - k");
  }
}

// Brute force over all 2^n vertex subsets: whether x contains a k-clique.
// best[x] is the largest clique inside x, by peeling off the lowest vertex.
std::vector<std::uint8_t> largest_clique_within(const Graph& g) {
  const auto adj = adjacency_masks(g);
  std::vector<std::uint8_t> best(std::size_t{1} << g.vertex_count(), 0);
  for (std::uint64_t x = 1; x < best.size(); ++x) {
    auto v = static_cast<std::size_t>(std::countr_zero(x));
    std::uint64_t rest = x & (x - 1);
    best[x] = std::max<std::uint8_t>(best[rest], static_cast<std::uint8_t>(1 + best[rest & adj[v]]));
  }
  return best;
}

void lemma6_graph(const Graph& g, ThresholdFactory& thr, std::size_t cap, Recorder& rec) {
  const std::size_t n = g.vertex_count();
  if (n > 20) throw OracleLimitError("lemma6 truth tables limited to n <= 20");
  const auto cliques = maximal_cliques(g, cap);
  const auto best = largest_clique_within(g);
  const VertexSet none(n);
  std::vector<Assignment> xs;
  for (std::uint64_t x = 0; x < best.size(); ++x) {
    Assignment a(n);
    for (std::size_t v = 0; v < n; ++v) a.set(v, (x >> v) & 1U);
    xs.push_back(std::move(a));
  }

  for (std::size_t k = 1; k <= n; ++k) {
    const Circuit c = build_induced_clique_circuit(g, cliques, k, thr);
    std::size_t thr_depth = 0;
    for (const auto& q : cliques) {
      if (q.size() >= k) thr_depth = std::max(thr_depth, thr.get(q.size(), k).depth());
    }
    if (c.depth() > ceil_log2(cliques.size()) + thr_depth) {
      rec.fail(g, k, none, none, "induced-clique depth " + std::to_string(c.depth()) + " above log mc + threshold depth");
    }
    auto vals = eval_many(c, xs);
    for (std::uint64_t x = 0; x < best.size(); ++x) {
      if (vals[x] != (best[x] >= k)) {
        rec.fail(g, k, VertexSet::from_mask(n, x), none, "induced-clique circuit disagrees with brute force");
      }
    }
    rec.count(xs.size());
  }
}

GameKind kind_for(Game game, const Graph& g, std::size_t oracle_limit) {
  switch (game) {
    case Game::Biclique: return GameKind::biclique();
    case Game::Clique: return GameKind::clique();
    case Game::RelaxedClique: return GameKind::relaxed_clique();
    case Game::EdgeBiclique: return edge_game_for(g, oracle_limit);
  }
  return GameKind::biclique();
}

void protocol_graph(Game game, const Graph& g, ThresholdFactory& thr, std::size_t oracle_limit, Recorder& rec,
                    SuiteReport& report) {
  const GameKind kind = kind_for(game, g, oracle_limit);
  GameCircuits circuits(g, thr);
  const std::size_t bound = bit_bound(kind, circuits);
  report.bound = std::max(report.bound, bound);
  const PlayOptions opts{oracle_limit};
  for (const auto& in : enumerate_valid_inputs(g, kind, oracle_limit)) {
    rec.count(1);
    try {
      Outcome out = play(kind, circuits, in.a, in.b, opts);
      const std::size_t bits = out.transcript.total_bits();
      report.max_bits_observed = std::max(report.max_bits_observed, bits);
      if (out.alice_answer != out.bob_answer) rec.fail(g, 0, in.a, in.b, "parties answered different nonedges");
      if (!satisfies_goal(kind, g, in.a, in.b, out.nonedge)) rec.fail(g, 0, in.a, in.b, "answer violates the goal");
      if (g.adjacent(out.nonedge.u, out.nonedge.v)) rec.fail(g, 0, in.a, in.b, "answer is an edge");
      if (bits > bound) {
        rec.fail(g, 0, in.a, in.b, std::to_string(bits) + " bits exceed bound " + std::to_string(bound));
      }
      if (!out.promise_verified) rec.fail(g, 0, in.a, in.b, "promise not verified");
      if (decode_transcript(kind, circuits, out.transcript) != out.nonedge) {
        rec.fail(g, 0, in.a, in.b, "observer decoded a different nonedge");
      }
      Outcome again = replay(kind, circuits, in.a, in.b, out.transcript, opts);
      if (again.transcript != out.transcript || again.nonedge != out.nonedge ||
          again.kind_of_answer != out.kind_of_answer) {
        rec.fail(g, 0, in.a, in.b, "replay diverged");
      }
      if (kind.game == Game::Clique && in.clique_pair && out.kind_of_answer != AnswerKind::Crossing) {
        rec.fail(g, 0, in.a, in.b, "clique inputs answered without a crossing nonedge");
      }
    } catch (const Error& e) {
      rec.fail(g, 0, in.a, in.b, std::string("exception: ") + e.what());
    }
  }
}

}  // namespace

SuiteReport run_suite(const Suite& suite, const std::vector<Graph>& catalog, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = suite_name(suite);
  report.builder = engine_name(options.thresholds.engine);
  report.seed = options.thresholds.valiant.seed;
  ThresholdFactory thr(options.thresholds);
  Recorder rec(report);

  for (const Graph& g : catalog) {
    const bool clique_suite = suite.kind == SuiteKind::Lemma2 || suite.kind == SuiteKind::Lemma3 ||
                              (suite.kind == SuiteKind::Protocol && GameKind{suite.game}.clique_family());
    if (clique_suite && g.bipartite()) continue;
    ++report.graphs_tested;
    try {
      switch (suite.kind) {
        case SuiteKind::Lemma1: lemma1_graph(g, thr, options.oracle_limit, rec); break;
        case SuiteKind::Lemma2: lemma2_graph(g, thr, options.oracle_limit, rec); break;
        case SuiteKind::Lemma3: lemma3_graph(g, thr, options.oracle_limit, rec); break;
        case SuiteKind::Lemma6: lemma6_graph(g, thr, kMaximalCliqueCap, rec); break;
        case SuiteKind::Protocol: protocol_graph(suite.game, g, thr, options.oracle_limit, rec, report); break;
      }
    } catch (const Error& e) {
      rec.fail(g, 0, VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), std::string("exception: ") + e.what());
    }
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

WorstCase worst_case_bits(const GameKind& kind, GameCircuits& circuits, std::size_t oracle_limit) {
  const Graph& g = circuits.graph();
  WorstCase worst{0, {VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), false}, 0};
  bool any = false;
  for (auto& in : enumerate_valid_inputs(g, kind, oracle_limit)) {
    ++worst.inputs;
    const std::size_t bits = play(kind, circuits, in.a, in.b, PlayOptions{oracle_limit}).transcript.total_bits();
    if (!any || bits > worst.bits) {
      worst.bits = bits;
      worst.witness = std::move(in);
      any = true;
    }
  }
  return worst;
}

}  // namespace cliquegame
