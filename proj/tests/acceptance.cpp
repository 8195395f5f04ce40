// One line per acceptance criterion; exit status is nonzero if any fails.
// Reference values come from tests/brute_force.hpp or from the checks below,
// never from the library's own oracles or referee.

#include "brute_force.hpp"

#include "cliquegame/errors.hpp"
#include "cliquegame/harness.hpp"
#include "cliquegame/json_io.hpp"
#include "cliquegame/oracles.hpp"
#include "cliquegame/threshold.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace cliquegame;

namespace {

// Pinned limits.
constexpr double kThresholdSeconds = 60.0;     // criterion 1
constexpr double kLemmaSuiteSeconds = 300.0;   // criterion 3
constexpr std::size_t kSortMaxN = 12;
constexpr std::size_t kValiantMaxN = 10;
constexpr std::size_t kLemmaRandomGraphs = 200;
constexpr std::size_t kLemma6MaxN = 8;
constexpr std::size_t kProtocolExhaustiveN = 6;
constexpr std::size_t kProtocolSampleN7 = 400;
constexpr std::size_t kOracleMaxN = 10;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s %d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::size_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1)); }

// All 2^n inputs of an n-variable circuit, 64 per packed pass, against pred(x).
bool matches_table(const Circuit& c, std::size_t n, const std::function<bool(std::uint64_t)>& pred) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t base = 0; base < total; base += 64) {
    const std::uint64_t count = std::min<std::uint64_t>(64, total - base);
    std::vector<std::uint64_t> cols(n, 0);
    std::uint64_t expect = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
      const std::uint64_t x = base + j;
      for (std::size_t i = 0; i < n; ++i) {
        if ((x >> i) & 1) cols[i] |= std::uint64_t{1} << j;
      }
      if (pred(x)) expect |= std::uint64_t{1} << j;
    }
    const std::uint64_t mask = count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
    if ((eval_packed(c, cols) & mask) != expect) return false;
  }
  return true;
}

// ---- graphs up to isomorphism ----------------------------------------------

using AdjRows = std::vector<std::uint32_t>;

std::uint64_t edge_code(const AdjRows& adj, const std::vector<int>& perm) {
  const std::size_t n = adj.size();
  std::uint64_t code = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((adj[perm[i]] >> perm[j]) & 1U) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

std::uint64_t canonical_code(const AdjRows& adj) {
  std::vector<int> perm(adj.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, edge_code(adj, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

AdjRows rows_from_code(std::size_t n, std::uint64_t code) {
  AdjRows adj(n, 0);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if ((code >> bit) & 1) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  return adj;
}

// One representative per isomorphism class, grown a vertex at a time.
std::vector<AdjRows> unlabeled_graphs(std::size_t n) {
  std::vector<AdjRows> level{AdjRows(1, 0)};
  for (std::size_t m = 2; m <= n; ++m) {
    std::set<std::uint64_t> seen;
    for (const AdjRows& g : level) {
      for (std::uint32_t nb = 0; nb < (1U << (m - 1)); ++nb) {
        AdjRows h = g;
        h.push_back(nb);
        for (std::size_t v = 0; v + 1 < m; ++v) {
          if ((nb >> v) & 1U) h[v] |= 1U << (m - 1);
        }
        seen.insert(canonical_code(h));
      }
    }
    level.clear();
    for (std::uint64_t code : seen) level.push_back(rows_from_code(m, code));
  }
  return level;
}

Graph to_graph(const AdjRows& adj) {
  std::vector<VertexPair> edges;
  for (Vertex u = 0; u < adj.size(); ++u) {
    for (Vertex v = u + 1; v < adj.size(); ++v) {
      if ((adj[u] >> v) & 1U) edges.push_back({u, v});
    }
  }
  return Graph(adj.size(), edges);
}

bool has_complete_star(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!g.bipartite() && g.degree(v) + 1 == g.vertex_count()) return true;
  }
  return false;
}

// ---- criterion 1 -------------------------------------------------------------

void threshold_exactness() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::size_t checked = 0;
  std::string bad;
  for (std::size_t n = 1; n <= kSortMaxN; ++n) {
    const std::size_t t = static_cast<std::size_t>(std::countr_zero(std::bit_ceil(n)));
    for (std::size_t k = 1; k <= n; ++k) {
      Circuit c = build_threshold_sort(n, k);
      const bool exact = matches_table(c, n, [k](std::uint64_t x) { return std::cmp_greater_equal(std::popcount(x), k); });
      const bool shallow = c.depth() <= t * (t + 1) / 2;
      if ((!exact || !shallow) && bad.empty()) bad = " first bad (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
      ok = ok && exact && shallow;
      ++checked;
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kThresholdSeconds;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu (n,k) pairs, n <= %zu, full truth tables, %.3f s (limit %.0f s)", checked, kSortMaxN,
                secs, kThresholdSeconds);
  report(1, "threshold exactness", ok, buf + bad);
}

// ---- criterion 2 -------------------------------------------------------------

void valiant_soundness() {
  bool ok = true;
  std::size_t built = 0, refused = 0, deterministic = 0;
  std::string bad;
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    for (std::size_t n = 1; n <= kValiantMaxN; ++n) {
      for (std::size_t k = 1; k <= n; ++k) {
        ValiantParams p;
        p.seed = seed;
        try {
          ValiantCircuit v = build_threshold_valiant(n, k, p);
          ++built;
          if (!matches_table(v.circuit, n, [k](std::uint64_t x) { return std::cmp_greater_equal(std::popcount(x), k); })) {
            ok = false;
            if (bad.empty()) bad = " wrong circuit at (n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ")";
          }
          ValiantCircuit again = build_threshold_valiant(n, k, p);
          if (serialize_circuit(again.circuit) == serialize_circuit(v.circuit) && again.attempts == v.attempts) {
            ++deterministic;
          } else {
            ok = false;
            if (bad.empty()) bad = " nondeterministic at seed " + std::to_string(seed);
          }
        } catch (const ConstructionError&) {
          // a refusal is sound, but with default parameters every case should succeed
          ++refused;
          ok = false;
        }
      }
    }
  }
  report(2, "valiant soundness", ok,
         std::to_string(built) + " circuits over n <= " + std::to_string(kValiantMaxN) +
             " and seeds 0..2 match full truth tables, " + std::to_string(deterministic) + " rebuilt identically, " +
             std::to_string(refused) + " refused" + bad);
}

// ---- criterion 3 -------------------------------------------------------------

void lemma_suites() {
  const auto t0 = Clock::now();
  std::vector<catalog::Selector> sel;
  for (std::size_t n = 1; n <= 5; ++n) sel.push_back(catalog::AllGraphs{n});
  sel.push_back(catalog::Random{6, 7, 0.5, kLemmaRandomGraphs});
  const std::vector<Graph> cat = graph_catalog(sel, 2024);
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
  for (ThresholdEngine e : {ThresholdEngine::SortingNetwork, ThresholdEngine::Valiant}) {
    SuiteOptions opt;
    opt.thresholds.engine = e;
    for (const char* name : {"lemma1", "lemma2", "lemma3"}) {
      SuiteReport r = run_suite(parse_suite(name), cat, opt);
      checks += r.inputs_tested;
      if (!r.passed()) {
        ok = false;
        detail += std::string(" ") + name + "/" + engine_name(e) + " failed " + std::to_string(r.failure_count) +
                  (r.failures.empty() ? "" : " (" + r.failures[0].what + ")");
      }
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs < kLemmaSuiteSeconds;
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu graphs, %zu checks, both builders, %.1f s (limit %.0f s)", cat.size(), checks, secs,
                kLemmaSuiteSeconds);
  report(3, "lemma 1/2/3 suites", ok, buf + detail);
}

// ---- criterion 4 -------------------------------------------------------------

void induced_clique_circuits() {
  std::vector<catalog::Selector> sel;
  for (std::size_t n = 1; n <= 5; ++n) sel.push_back(catalog::AllGraphs{n});
  for (double p : {0.3, 0.5, 0.7}) sel.push_back(catalog::Random{6, kLemma6MaxN, p, 100});
  std::vector<Graph> cat = graph_catalog(sel, 77);
  for (std::size_t n : {6u, 7u, 8u}) cat.push_back(cycle_graph(n));
  bool ok = true;
  std::size_t circuits = 0;
  std::string bad;
  for (ThresholdEngine e : {ThresholdEngine::SortingNetwork, ThresholdEngine::Valiant}) {
    ThresholdFactory thr({e, {}});
    for (const Graph& g : cat) {
      const std::size_t n = g.vertex_count();
      // brute-force clique number of every induced subgraph
      std::vector<std::size_t> omega_of(std::size_t{1} << n, 0);
      for (std::uint64_t x = 0; x < omega_of.size(); ++x) {
        for (std::uint64_t s = x;; s = (s - 1) & x) {
          if (bf::is_clique(g, s)) omega_of[x] = std::max(omega_of[x], bf::popcount(s));
          if (s == 0) break;
        }
      }
      const auto mcs = bf::maximal_cliques(g);
      for (std::size_t k = 1; k <= n; ++k) {
        Circuit c = build_induced_clique_circuit(g, k, thr);
        ++circuits;
        if (!matches_table(c, n, [&](std::uint64_t x) { return omega_of[x] >= k; })) {
          ok = false;
          if (bad.empty()) bad = " wrong at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        std::size_t thr_depth = 0, wide = 0;
        for (const auto& m : mcs) {
          if (m.size() < k) continue;
          ++wide;
          thr_depth = std::max(thr_depth, thr.get(m.size(), k).depth());
        }
        const std::size_t limit = wide == 0 ? 0 : ceil_log2(mcs.size()) + thr_depth;
        if (c.depth() > limit) {
          ok = false;
          if (bad.empty()) bad = " too deep at n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
      }
    }
    SuiteOptions opt;
    opt.thresholds.engine = e;
    SuiteReport r = run_suite(parse_suite("lemma6"), cat, opt);
    if (!r.passed()) {
      ok = false;
      bad += " lemma6 suite/" + engine_name(e) + " failed " + std::to_string(r.failure_count);
    }
  }
  report(4, "induced-clique circuits", ok,
         std::to_string(cat.size()) + " graphs with n <= " + std::to_string(kLemma6MaxN) + ", " + std::to_string(circuits) +
             " circuits matched brute force on all inputs within the depth bound" + bad);
}

// ---- criteria 5, 6 (first half), 7 (second half) ---------------------------

// Goal predicate written from the game definitions, over vertex masks.
bool referee(const GameKind& kind, const Graph& g, std::uint64_t a, std::uint64_t b, const VertexPair& e) {
  const std::size_t n = g.vertex_count();
  if (e.u >= n || e.v >= n || e.u == e.v || g.adjacent(e.u, e.v)) return false;
  if (g.bipartite() && g.in_left(e.u) == g.in_left(e.v)) return false;
  const std::uint64_t u = std::uint64_t{1} << e.u, v = std::uint64_t{1} << e.v;
  auto across = [&](std::uint64_t x, std::uint64_t y) { return ((u & x) && (v & y)) || ((v & x) && (u & y)); };
  const bool within = (u & (a | b)) && (v & (a | b));
  if (kind.game == Game::Biclique || kind.game == Game::EdgeBiclique) return across(a, b);
  if (kind.game == Game::Clique) return within;
  std::uint64_t gamma = 0;
  for (Vertex w = 0; w < n; ++w) {
    if ((b >> w) & 1) continue;
    bool all = true;
    for (Vertex x = 0; x < n; ++x) {
      if (((b >> x) & 1) && !g.adjacent(w, x)) all = false;
    }
    if (all) gamma |= std::uint64_t{1} << w;
  }
  return within || across(a, b | gamma);
}

struct ProtocolTally {
  std::size_t graphs = 0;
  std::size_t inputs = 0;
  std::size_t wrong = 0;
  std::size_t over_bound = 0;
  std::size_t count_mismatch = 0;
  std::size_t max_bits = 0;
  std::size_t omega_violations = 0;
  std::string first;
};

void play_every_input(const Graph& g, ThresholdFactory& thr, ProtocolTally& t) {
  const std::size_t n = g.vertex_count();
  const std::size_t omega = bf::max_clique(g);
  const bf::BicliqueMax bm = bf::max_biclique(g);
  if (omega > bm.size) ++t.omega_violations;
  GameCircuits gc(g, thr);
  std::vector<GameKind> kinds{GameKind::biclique(), GameKind::edge_biclique(bm.edges)};
  if (!g.bipartite()) {
    kinds.push_back(GameKind::clique());
    kinds.push_back(GameKind::relaxed_clique());
  }
  std::uint64_t left = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (g.in_left(v)) left |= std::uint64_t{1} << v;
  }
  ++t.graphs;
  for (const GameKind& kind : kinds) {
    const std::size_t bound = bit_bound(kind, gc);
    std::size_t count = 0;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n); ++a) {
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
        if (a & b) continue;
        const std::size_t sa = bf::popcount(a), sb = bf::popcount(b);
        if (g.bipartite() && ((a & ~left) || (b & left))) continue;
        switch (kind.game) {
          case Game::Biclique:
            if (!a || !b || sa + sb <= bm.size) continue;
            break;
          case Game::EdgeBiclique:
            if (sa * sb <= bm.edges) continue;
            break;
          case Game::Clique:
          case Game::RelaxedClique:
            if (sa + sb <= omega) continue;
            break;
        }
        ++count;
        ++t.inputs;
        const VertexSet va = VertexSet::from_mask(n, a), vb = VertexSet::from_mask(n, b);
        try {
          Outcome o = play(kind, gc, va, vb);
          const bool good = o.alice_answer == o.bob_answer && o.nonedge == o.alice_answer &&
                            referee(kind, g, a, b, o.nonedge) && o.promise_verified;
          if (!good) {
            ++t.wrong;
            if (t.first.empty()) t.first = game_name(kind.game) + " on " + format_graph(g);
          }
          t.max_bits = std::max(t.max_bits, o.transcript.total_bits());
          if (o.transcript.total_bits() > bound) ++t.over_bound;
        } catch (const std::exception& ex) {
          ++t.wrong;
          if (t.first.empty()) t.first = game_name(kind.game) + ": " + ex.what();
        }
      }
    }
    if (count != enumerate_valid_inputs(g, kind).size()) ++t.count_mismatch;
  }
}

void protocol_correctness() {
  const auto t0 = Clock::now();
  std::vector<Graph> cat;
  for (std::size_t n = 1; n <= kProtocolExhaustiveN; ++n) {
    for (Graph& g : graph_catalog(catalog::AllGraphs{n})) cat.push_back(std::move(g));
  }
  const std::size_t labeled = cat.size();
  // every 7-vertex graph up to isomorphism; ones with a complete star strip to graphs covered above
  const auto classes = unlabeled_graphs(7);
  std::size_t star_free7 = 0;
  for (const AdjRows& adj : classes) {
    Graph g = to_graph(adj);
    if (has_complete_star(g)) continue;
    cat.push_back(std::move(g));
    ++star_free7;
  }
  for (Graph& g : graph_catalog(
           std::vector<catalog::Selector>{catalog::Random{7, 7, 0.3, kProtocolSampleN7 / 4},
                                          catalog::Random{7, 7, 0.5, kProtocolSampleN7 / 2},
                                          catalog::Random{7, 7, 0.7, kProtocolSampleN7 / 4}, catalog::Path{7},
                                          catalog::Cycle{7}, catalog::CompleteBipartite{3, 4, true},
                                          catalog::CompleteBipartite{3, 4, false}, catalog::RandomBipartite{3, 4, 0.6, 30},
                                          catalog::RandomBipartite{2, 3, 0.6, 20}},
           7)) {
    cat.push_back(std::move(g));
  }

  ProtocolTally sort_t, val_t;
  ThresholdFactory sort_thr;
  ThresholdFactory val_thr({ThresholdEngine::Valiant, {}});
  for (const Graph& g : cat) play_every_input(g, sort_thr, sort_t);
  // the Valiant builder on the smaller part of the catalog
  for (const Graph& g : cat) {
    if (g.vertex_count() <= 5 || g.vertex_count() == 7) play_every_input(g, val_thr, val_t);
  }
  const double secs = seconds_since(t0);

  const bool ok5 = sort_t.wrong == 0 && val_t.wrong == 0 && sort_t.count_mismatch == 0 && val_t.count_mismatch == 0 &&
                   classes.size() == 1044;
  char buf[400];
  std::snprintf(buf, sizeof buf,
                "%zu graphs (%zu labeled n <= %zu, %zu of %zu unlabeled n = 7, rest sampled/named), %zu inputs with sort "
                "+ %zu with valiant, %zu wrong, %zu input-count mismatches, %.0f s",
                cat.size(), labeled, kProtocolExhaustiveN, star_free7, classes.size(), sort_t.inputs, val_t.inputs,
                sort_t.wrong + val_t.wrong, sort_t.count_mismatch + val_t.count_mismatch, secs);
  report(5, "protocol correctness", ok5, buf + (sort_t.first.empty() ? val_t.first : sort_t.first));

  std::snprintf(buf, sizeof buf, "%zu played inputs, %zu over bit_bound, max transcript %zu bits",
                sort_t.inputs + val_t.inputs, sort_t.over_bound + val_t.over_bound,
                std::max(sort_t.max_bits, val_t.max_bits));
  report(6, "bit bound on every played input", sort_t.over_bound + val_t.over_bound == 0, buf);

  std::snprintf(buf, sizeof buf, "omega <= omega_b on all %zu catalog graphs: %zu violations", cat.size(),
                sort_t.omega_violations);
  report(7, "omega <= omega_b", sort_t.omega_violations == 0, buf);
}

// ---- criterion 6, large n ----------------------------------------------------

bool complement_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v = 0; v < n; ++v) {
      if (v != u && !seen[v] && !g.adjacent(u, v)) {
        seen[v] = true;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

// Maximum clique by branch and bound over 64-bit masks.
void grow(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t& best) {
  if (std::popcount(r) > std::popcount(best)) best = r;
  while (p) {
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    const int v = std::countr_zero(p);
    p &= p - 1;
    std::uint64_t nb = 0;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
      if (g.adjacent(v, w)) nb |= std::uint64_t{1} << w;
    }
    grow(g, r | (std::uint64_t{1} << v), p & nb, best);
  }
}

std::uint64_t maximum_clique(const Graph& g) {
  std::uint64_t best = 0;
  const std::size_t n = g.vertex_count();
  grow(g, 0, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, best);
  return best;
}

void large_n_bits() {
  bool ok = true;
  std::ostringstream detail;
  std::mt19937_64 rng(4242);
  for (std::size_t n : {8u, 16u, 32u, 64u}) {
    std::size_t worst = 0, limit = 0, played = 0, d_max = 0;
    for (std::uint64_t seed = 0; played < 400; ++seed) {
      Graph g = random_graph(n, 0.5, 1000 * n + seed);
      if (!complement_connected(g) || has_complete_star(g)) continue;
      ThresholdFactory thr;
      GameCircuits gc(g, thr);
      std::size_t df = 0, dg = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        df = std::max(df, gc.f(k).depth());
        dg = std::max(dg, gc.g(k).depth());
      }
      const std::size_t d = std::max(df, dg);
      d_max = std::max(d_max, d);
      // f_k: a sorting network at its theoretical depth over monomial trees at most ceil(log2(n-1)) deep
      const std::size_t t = static_cast<std::size_t>(std::countr_zero(std::bit_ceil(n)));
      if (df > t * (t + 1) / 2 + ceil_log2(n - 1)) ok = false;
      const std::size_t cap = 2 + size_field_width(n) + d;
      limit = std::max(limit, cap);
      auto check = [&](const GameKind& kind, std::uint64_t a, std::uint64_t b) {
        Outcome o = play(kind, gc, VertexSet::from_mask(n, a), VertexSet::from_mask(n, b));
        ++played;
        worst = std::max(worst, o.transcript.total_bits());
        if (o.transcript.total_bits() > cap || !referee(kind, g, a, b, o.nonedge) || o.alice_answer != o.bob_answer) {
          ok = false;
        }
      };
      const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      for (int i = 0; i < 10; ++i) {
        std::uint64_t a = rng() & all;
        if (a == 0 || a == all) continue;
        check(GameKind::biclique(), a, all & ~a);
      }
      if (n <= kBicliqueOracleLimit) {
        const std::uint64_t big_k = max_edge_biclique(g);
        for (int i = 0; i < 10; ++i) {
          std::uint64_t a = rng() & all;
          const std::uint64_t b = all & ~a;
          if (static_cast<std::uint64_t>(std::popcount(a)) * std::popcount(b) <= big_k) continue;
          check(GameKind::edge_biclique(big_k), a, b);
        }
      }
      const std::uint64_t q = maximum_clique(g);
      for (std::uint64_t rest = q; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        for (Vertex u = 0; u < n; ++u) {
          if (((q >> u) & 1) || !g.adjacent(u, v)) continue;
          const std::uint64_t a = q & ~(std::uint64_t{1} << v);
          const std::uint64_t b = (std::uint64_t{1} << v) | (std::uint64_t{1} << u);
          check(GameKind::clique(), a, b);
          check(GameKind::relaxed_clique(), a, b);
          break;
        }
      }
    }
    detail << " n=" << n << ": d(n)=" << d_max << " max " << worst << " <= " << limit << " bits;";
  }
  report(6, "sort-builder bits at n = 8..64", ok, detail.str().substr(1));
}

// ---- criterion 7, first half -------------------------------------------------

void oracle_cross_checks() {
  std::vector<Graph> cat;
  std::mt19937_64 rng(99);
  for (std::size_t n = 1; n <= kOracleMaxN; ++n) {
    for (double p : {0.2, 0.5, 0.8}) {
      for (int i = 0; i < 8; ++i) cat.push_back(random_graph(n, p, rng()));
    }
  }
  for (std::size_t l = 1; l <= 5; ++l) {
    for (int i = 0; i < 6; ++i) cat.push_back(random_bipartite_graph(l, kOracleMaxN - l, 0.6, rng()));
  }
  for (std::size_t n = 1; n <= 4; ++n) {
    for (Graph& g : all_labeled_graphs(n)) cat.push_back(std::move(g));
  }
  std::size_t mismatches = 0;
  for (const Graph& g : cat) {
    const bf::BicliqueMax bm = bf::max_biclique(g);
    std::vector<std::vector<Vertex>> lib;
    for (const VertexSet& c : maximal_cliques(g)) {
      std::vector<Vertex> m;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (c.contains(v)) m.push_back(v);
      }
      lib.push_back(m);
    }
    std::sort(lib.begin(), lib.end());
    if (max_clique_size(g) != bf::max_clique(g) || max_biclique_size(g) != bm.size || max_edge_biclique(g) != bm.edges ||
        lib != bf::maximal_cliques(g)) {
      ++mismatches;
    }
  }
  report(7, "oracle cross-checks", mismatches == 0,
         std::to_string(cat.size()) + " graphs with n <= " + std::to_string(kOracleMaxN) +
             " (omega, omega_b, mc, edge biclique) against subset enumeration: " + std::to_string(mismatches) +
             " mismatches");
}

// ---- criterion 8 -------------------------------------------------------------

std::string run_once(const Graph& g, ThresholdOptions opt, const PlayContext& ctx) {
  ThresholdFactory thr(opt);
  GameCircuits gc(g, thr);
  std::string out;
  std::vector<GameKind> kinds{GameKind::biclique(), edge_game_for(g)};
  if (!g.bipartite()) {
    kinds.push_back(GameKind::clique());
    kinds.push_back(GameKind::relaxed_clique());
  }
  for (const GameKind& kind : kinds) {
    for (const auto& in : enumerate_valid_inputs(g, kind)) {
      out += transcript_json(kind, g, in.a, in.b, play(kind, gc, in.a, in.b), ctx).dump() + "\n";
    }
  }
  return out;
}

void determinism() {
  std::vector<Graph> cat{cycle_graph(5), path_graph(6), strip_stars(random_graph(7, 0.5, 3)).graph,
                         random_bipartite_graph(3, 4, 0.5, 8)};
  std::size_t runs = 0, differ = 0, bytes = 0;
  for (const Graph& g : cat) {
    for (std::uint64_t seed : {0u, 7u}) {
      for (ThresholdEngine e : {ThresholdEngine::SortingNetwork, ThresholdEngine::Valiant}) {
        ThresholdOptions opt{e, {}};
        opt.valiant.seed = seed;
        const PlayContext ctx{engine_name(e), seed};
        const std::string first = run_once(g, opt, ctx), second = run_once(g, opt, ctx);
        ++runs;
        bytes += first.size();
        if (first != second) ++differ;
      }
    }
  }
  report(8, "determinism", differ == 0,
         std::to_string(runs) + " repeated seeded runs, " + std::to_string(bytes) + " transcript bytes each compared, " +
             std::to_string(differ) + " differ");
}

std::vector<int> selected;  // empty runs everything

void guarded(int id, const char* title, void (*criterion)()) {
  if (!selected.empty() && std::find(selected.begin(), selected.end(), id) == selected.end()) return;
  try {
    criterion();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("threw: ") + e.what());
  }
}

}  // namespace

// Optional arguments pick criteria by number, e.g. `acceptance 1 8`.
int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  guarded(1, "threshold exactness", threshold_exactness);
  guarded(2, "valiant soundness", valiant_soundness);
  guarded(3, "lemma 1/2/3 suites", lemma_suites);
  guarded(4, "induced-clique circuits", induced_clique_circuits);
  guarded(5, "protocol correctness", protocol_correctness);
  guarded(6, "sort-builder bits at n = 8..64", large_n_bits);
  guarded(7, "oracle cross-checks", oracle_cross_checks);
  guarded(8, "determinism", determinism);
  std::printf("%s: %d failing line(s)\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
